//! D_n equals the probability that a random permutation has no fixed point.

use pilegame::exact::{derangement_prob, derangements, solve_recursive};

fn main() {
    let n_max = 15;
    let table = solve_recursive(n_max);
    let der = derangements(n_max);
    println!(
        "{:>3}  {:>14}  {:>16}  {:>10}",
        "n", "d_n", "n!", "D_n == d_n/n!"
    );
    for n in 0..=n_max {
        let same = table.d(n).unwrap() == derangement_prob(n, &der).unwrap();
        println!(
            "{n:>3}  {:>14}  {:>16}  {same:>10}",
            der.d()[n].to_string(),
            der.factorial()[n].to_string()
        );
    }
}
