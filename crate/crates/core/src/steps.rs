//! Expected number of moves made by the random player.
//!
//! `Z_n` counts the random player's moves in a game started from `n`
//! elements and `Q_n = Z_n - Z_{n-1}`. Two recursions are provided:
//! [`expected_steps`] iterates `E(Z_n) = 1 + (1/n) sum_{k=1}^{n-2} E(Z_k)`,
//! and [`q_sequence`] iterates the first-order relation
//! `n E(Q_n) = 1 - E(Q_{n-1})` on its own.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::prob::Rational;

/// Exact `E(Z_n)` for `n = 1..=n_max` and `E(Q_n)` for `n = 2..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepsTable {
    // ez[i] = E(Z_{i+1})
    ez: Vec<Rational>,
    // eq[i] = E(Q_{i+2})
    eq: Vec<Rational>,
}

impl StepsTable {
    pub fn n_max(&self) -> usize {
        self.ez.len()
    }

    /// `E(Z_n)`, defined for `1 <= n <= n_max`.
    pub fn ez(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(1).and_then(|i| self.ez.get(i))
    }

    /// `E(Q_n)`, defined for `2 <= n <= n_max`.
    pub fn eq(&self, n: usize) -> Option<&Rational> {
        n.checked_sub(2).and_then(|i| self.eq.get(i))
    }

    /// `E(Z_1), ..., E(Z_{n_max})`.
    pub fn ez_values(&self) -> &[Rational] {
        &self.ez
    }

    /// `E(Q_2), ..., E(Q_{n_max})`.
    pub fn eq_values(&self) -> &[Rational] {
        &self.eq
    }
}

fn integer(n: usize) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Base cases `E(Z_1) = E(Z_2) = 1`: with one or two elements the random
/// player moves exactly once whatever it draws.
pub fn expected_steps(n_max: usize) -> Result<StepsTable> {
    if n_max < 1 {
        return Err(Error::TooSmall {
            what: "n_max",
            min: 1,
            got: n_max as u64,
        });
    }
    let mut ez: Vec<Rational> = Vec::with_capacity(n_max);
    ez.push(Rational::one());
    if n_max >= 2 {
        ez.push(Rational::one());
    }
    // running sum of E(Z_1..=E(Z_{n-2}))
    let mut prefix = Rational::zero();
    for n in 3..=n_max {
        prefix += &ez[n - 3];
        ez.push(Rational::one() + &prefix / integer(n));
    }
    let eq = ez.windows(2).map(|w| &w[1] - &w[0]).collect();
    Ok(StepsTable { ez, eq })
}

/// `E(Q_2), ..., E(Q_{n_max})` from `E(Q_2) = 0` and
/// `E(Q_n) = (1 - E(Q_{n-1})) / n`.
pub fn q_sequence(n_max: usize) -> Result<Vec<Rational>> {
    if n_max < 2 {
        return Err(Error::TooSmall {
            what: "n_max",
            min: 2,
            got: n_max as u64,
        });
    }
    let mut eq = Vec::with_capacity(n_max - 1);
    eq.push(Rational::zero());
    for n in 3..=n_max {
        let prev: &Rational = &eq[n - 3];
        let next = (Rational::one() - prev) / integer(n);
        eq.push(next);
    }
    Ok(eq)
}
