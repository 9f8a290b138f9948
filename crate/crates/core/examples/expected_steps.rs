//! Expected number of moves made by the random player, and its increments.

use pilegame::oracle::oracle_expected_steps;
use pilegame::prob::to_f64;
use pilegame::steps::{expected_steps, q_sequence};

fn main() {
    let n_max = 14;
    let table = expected_steps(n_max).unwrap();
    let q = q_sequence(n_max).unwrap();
    println!(
        "{:>3}  {:>22}  {:>10}  {:>22}  oracle",
        "n", "E(Z_n)", "float", "E(Q_n)"
    );
    for n in 1..=n_max {
        let ez = table.ez(n).unwrap();
        let eq = if n >= 2 {
            q[n - 2].to_string()
        } else {
            "-".into()
        };
        let oracle = oracle_expected_steps(n).map(|o| &o == ez).unwrap_or(false);
        println!(
            "{n:>3}  {:>22}  {:>10.6}  {eq:>22}  {oracle}",
            ez.to_string(),
            to_f64(ez)
        );
    }
}
