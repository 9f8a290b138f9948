//! Distance of D_n from 1/e against the first omitted term 1/(n+1)!.

use pilegame::exact::{gap_to_limit, solve_recursive, E_INV};
use pilegame::prob::to_f64;

fn main() {
    let n_max = 20;
    let table = solve_recursive(n_max);
    println!("1/e = {E_INV}");
    println!("{:>3}  {:>20}  {:>12}  {:>12}", "n", "D_n", "gap", "bound");
    for n in 0..=n_max {
        let g = gap_to_limit(n, &table).unwrap();
        println!(
            "{n:>3}  {:>20.17}  {:>12.4e}  {:>12.4e}",
            g.d_n_float,
            g.gap,
            to_f64(&g.bound)
        );
    }
}
