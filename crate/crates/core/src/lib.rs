//! Analysis of a two-player pile game.
//!
//! A pile starts with `n` elements. The random player moves first and removes
//! `k` elements with `k` uniform on `{1, ..., m}`, `m` being the current pile
//! size; the deterministic player always removes one element. Whoever empties
//! the pile wins.
//!
//! The deterministic player wins with probability `D_n = d_n / n!`, where
//! `d_n` counts the derangements of `n` items, so `D_n -> 1/e`. This crate
//! computes that probability exactly by four independent routes
//! ([`exact`]), checks it against an exhaustive game-tree [`oracle`] and a
//! seeded Monte Carlo [`sim`]ulator, and computes the expected number of
//! moves of the random player ([`steps`]).
//!
//! ```
//! use pilegame::exact::{derangements, derangement_prob, solve_recursive};
//!
//! let table = solve_recursive(10);
//! let der = derangements(10);
//! assert_eq!(table.d(10).unwrap(), derangement_prob(10, &der).unwrap());
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod oracle;
pub mod prob;
pub mod report;
pub mod rng;
pub mod sim;
pub mod steps;
pub mod verify;

pub use error::{Error, Result};
pub use prob::{ExactProb, Rational};
