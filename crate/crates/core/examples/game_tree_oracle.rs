//! Exhaustive game-tree evaluation, with and without caching.

use std::time::Instant;

use pilegame::oracle::Oracle;

fn main() {
    for (label, oracle) in [
        ("memoized", Oracle::memoized()),
        ("exhaustive", Oracle::exhaustive()),
    ] {
        let start = Instant::now();
        println!("{label} (depth limit {})", oracle.depth_limit());
        for n in 0..=oracle.depth_limit() {
            let r = oracle.evaluate(n).unwrap();
            let steps = r
                .expected_r_steps
                .map(|s| s.to_string())
                .unwrap_or_else(|| "-".into());
            println!(
                "  n={n:>2}  D_n={:<16} E(Z_n)={steps}",
                r.d_win_prob.to_string()
            );
        }
        println!("  {:?}", start.elapsed());
    }
}
