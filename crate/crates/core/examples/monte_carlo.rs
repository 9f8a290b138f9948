//! Estimates D_n by simulation and compares with the exact value.

use pilegame::exact::closed_form;
use pilegame::sim::run_trials;

fn main() {
    let trials = 200_000;
    let seed = 42;
    let workers = 4;
    println!(
        "{:>3}  {:>10}  {:>10}  {:>21}  inside",
        "n", "exact", "p_hat", "99% Wilson interval"
    );
    for n in 1..=12u64 {
        let exact = closed_form(n as usize).complement().to_f64();
        let r = run_trials(n, trials, seed, workers, 0.99).unwrap();
        let inside = r.ci_low <= exact && exact <= r.ci_high;
        println!(
            "{n:>3}  {exact:>10.6}  {:>10.6}  [{:.6}, {:.6}]  {inside}",
            r.p_hat, r.ci_low, r.ci_high
        );
    }
}
