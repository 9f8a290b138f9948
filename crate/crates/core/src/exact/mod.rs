//! Exact solutions for the random player's win probability `R_n` and the
//! deterministic player's `D_n = 1 - R_n`.
//!
//! Four independent routes produce the same table of exact rationals:
//!
//! * [`solve_recursive`]: the second-order recurrence
//!   `n R_n = R_{n-2} + (n-1) R_{n-1}`, seeded with `R_0 = 0`, `R_1 = 1`.
//! * [`solve_telescoping`]: partial sums of the consecutive differences
//!   `a_n = R_n - R_{n-1} = (-1)^{n+1} / n!`.
//! * [`closed_form`]: `R_n = 1 - sum_{k=0}^{n} (-1)^k / k!`, evaluated per `n`.
//! * [`gf_coefficients`]: coefficients of the truncated product
//!   `(sum x^n) * (1 - sum (-1)^n x^n / n!)`.
//!
//! [`derangements`] and [`derangement_prob`] tie `D_n` to `d_n / n!`, and
//! [`gap_to_limit`] measures how far `D_n` sits from `e^-1`.

mod derangement;
mod limit;
mod series;
mod win;

pub use derangement::{derangement_prob, derangements, DerangementTable};
pub use limit::{alternating_bound, gap_to_limit, LimitGap, E_INV, FLOAT_SLACK};
pub use series::{gf_coefficients, TruncatedSeries};
pub use win::{
    closed_form, solve, solve_closed_form, solve_gf, solve_recursive, solve_telescoping,
    telescoping_terms, Method, WinTable,
};
