//! Computes R_n four ways and shows that they coincide exactly.
//!
//!     cargo run --example four_methods -- 12

use pilegame::exact::{solve, Method};

fn main() {
    let n_max: usize = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("n_max must be a non-negative integer"))
        .unwrap_or(12);

    let tables: Vec<_> = Method::ALL.iter().map(|&m| solve(m, n_max)).collect();

    println!("{:>4}  {:>24}  {:>24}  agree", "n", "R_n", "D_n");
    for n in 0..=n_max {
        let r = tables[0].r(n).unwrap();
        let agree = tables.iter().all(|t| t.r(n).unwrap() == r);
        println!(
            "{n:>4}  {:>24}  {:>24}  {agree}",
            r.to_string(),
            r.complement().to_string()
        );
    }
}
