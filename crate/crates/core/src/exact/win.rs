use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::series::gf_coefficients;
use crate::error::{Error, Result};
use crate::prob::{ExactProb, Rational};

/// Which analytic route produced a [`WinTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recursive,
    Telescoping,
    ClosedForm,
    Gf,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Recursive,
        Method::Telescoping,
        Method::ClosedForm,
        Method::Gf,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Recursive => "recursive",
            Method::Telescoping => "telescoping",
            Method::ClosedForm => "closed-form",
            Method::Gf => "gf",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// `R_n` for `n = 0..=n_max`, tagged with the method that computed it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WinTable {
    method: Method,
    r: Vec<ExactProb>,
}

impl WinTable {
    fn new(method: Method, r: Vec<ExactProb>) -> Self {
        debug_assert!(!r.is_empty());
        WinTable { method, r }
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn n_max(&self) -> usize {
        self.r.len() - 1
    }

    /// The random player's win probabilities, indexed by pile size.
    pub fn r_values(&self) -> &[ExactProb] {
        &self.r
    }

    pub fn r(&self, n: usize) -> Result<&ExactProb> {
        self.r.get(n).ok_or(Error::IndexOutOfRange {
            n,
            n_max: self.n_max(),
        })
    }

    /// `D_n = 1 - R_n`.
    pub fn d(&self, n: usize) -> Result<ExactProb> {
        self.r(n).map(ExactProb::complement)
    }
}

/// Iterates `n R_n = R_{n-2} + (n-1) R_{n-1}` from `R_0 = 0`, `R_1 = 1`.
///
/// The recurrence is applied from `n = 2` on; at `n = 2` it yields `1/2`,
/// matching the direct case split.
pub fn solve_recursive(n_max: usize) -> WinTable {
    let mut r: Vec<Rational> = Vec::with_capacity(n_max + 1);
    r.push(Rational::zero());
    if n_max >= 1 {
        r.push(Rational::one());
    }
    for n in 2..=n_max {
        let next = (&r[n - 2] + &r[n - 1] * Rational::from_integer(BigInt::from(n - 1)))
            / Rational::from_integer(BigInt::from(n));
        r.push(next);
    }
    WinTable::new(
        Method::Recursive,
        r.into_iter().map(ExactProb::checked).collect(),
    )
}

/// Consecutive differences `a_n = (-1)^{n+1} / n!` for `n = 1..=n_max`.
///
/// Index 0 of the result holds `a_1`.
pub fn telescoping_terms(n_max: usize) -> Vec<Rational> {
    let mut factorial = BigInt::one();
    (1..=n_max)
        .map(|n| {
            factorial *= n;
            let sign = if n % 2 == 1 { 1 } else { -1 };
            Rational::new(BigInt::from(sign), factorial.clone())
        })
        .collect()
}

/// `R_n = R_0 + a_1 + ... + a_n` with `R_0 = 0`.
pub fn solve_telescoping(n_max: usize) -> WinTable {
    let mut acc = Rational::zero();
    let mut r = Vec::with_capacity(n_max + 1);
    r.push(ExactProb::checked(acc.clone()));
    for a in telescoping_terms(n_max) {
        acc += a;
        r.push(ExactProb::checked(acc.clone()));
    }
    WinTable::new(Method::Telescoping, r)
}

/// `R_n = 1 - sum_{k=0}^{n} (-1)^k / k!`, evaluated from scratch.
///
/// The sum is taken over the common denominator `n!`: the `k`-th term
/// contributes `(-1)^k * n!/k!`.
pub fn closed_form(n: usize) -> ExactProb {
    // n!/k! for k = n, n-1, ..., 0
    let mut tail = BigInt::one();
    let mut sum = BigInt::zero();
    for k in (0..=n).rev() {
        if k % 2 == 0 {
            sum += &tail;
        } else {
            sum -= &tail;
        }
        if k > 0 {
            tail *= k;
        }
    }
    // tail is now n!
    let d = Rational::new(sum, tail);
    ExactProb::checked(Rational::one() - d)
}

/// [`closed_form`] for every `n` in `0..=n_max`.
pub fn solve_closed_form(n_max: usize) -> WinTable {
    WinTable::new(Method::ClosedForm, (0..=n_max).map(closed_form).collect())
}

/// Table built from the generating-function coefficients.
pub fn solve_gf(n_max: usize) -> WinTable {
    WinTable::new(Method::Gf, gf_coefficients(n_max))
}

pub fn solve(method: Method, n_max: usize) -> WinTable {
    match method {
        Method::Recursive => solve_recursive(n_max),
        Method::Telescoping => solve_telescoping(n_max),
        Method::ClosedForm => solve_closed_form(n_max),
        Method::Gf => solve_gf(n_max),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::ratio;

    fn values(t: &WinTable) -> Vec<Rational> {
        t.r_values().iter().map(|p| p.value().clone()).collect()
    }

    #[test]
    fn recursive_base_cases() {
        assert_eq!(values(&solve_recursive(0)), vec![ratio(0, 1)]);
        assert_eq!(
            values(&solve_recursive(2)),
            vec![ratio(0, 1), ratio(1, 1), ratio(1, 2)]
        );
    }

    #[test]
    fn recursive_small_values() {
        // R_3 = (R_0 + R_1 + 1)/3 by direct conditioning on the first draw.
        let t = solve_recursive(5);
        assert_eq!(t.r(3).unwrap().value(), &ratio(2, 3));
        assert_eq!(t.r(4).unwrap().value(), &ratio(5, 8));
        assert_eq!(t.r(5).unwrap().value(), &ratio(19, 30));
        assert_eq!(t.method(), Method::Recursive);
    }

    #[test]
    fn recursive_matches_full_conditioning_sum() {
        // R_n = (1/n) (sum_{k=0}^{n-2} R_k + 1)
        let t = solve_recursive(30);
        for n in 2..=30 {
            let s: Rational = (0..=n - 2)
                .map(|k| t.r(k).unwrap().value().clone())
                .fold(Rational::one(), |a, b| a + b);
            let expect = s / Rational::from_integer(BigInt::from(n));
            assert_eq!(t.r(n).unwrap().value(), &expect, "n = {n}");
        }
    }

    #[test]
    fn telescoping_terms_first_values() {
        let a = telescoping_terms(4);
        assert_eq!(
            a,
            vec![ratio(1, 1), ratio(-1, 2), ratio(1, 6), ratio(-1, 24)]
        );
        assert!(telescoping_terms(0).is_empty());
    }

    #[test]
    fn telescoping_values() {
        assert_eq!(
            values(&solve_telescoping(1)),
            vec![ratio(0, 1), ratio(1, 1)]
        );
        assert_eq!(solve_telescoping(3).r(3).unwrap().value(), &ratio(2, 3));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(closed_form(0).value(), &ratio(0, 1));
        assert_eq!(closed_form(1).value(), &ratio(1, 1));
        assert_eq!(closed_form(2).value(), &ratio(1, 2));
        assert_eq!(closed_form(4).value(), &ratio(5, 8));
        assert_eq!(closed_form(4).complement().value(), &ratio(9, 24));
    }

    #[test]
    fn table_index_out_of_range() {
        let t = solve_recursive(3);
        assert_eq!(
            t.r(4).unwrap_err(),
            Error::IndexOutOfRange { n: 4, n_max: 3 }
        );
        assert_eq!(t.d(0).unwrap(), ExactProb::one());
    }

    #[test]
    fn method_names_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("fourier".parse::<Method>().is_err());
    }

    #[test]
    fn all_methods_agree_to_sixty() {
        let reference = values(&solve_recursive(60));
        for m in Method::ALL {
            assert_eq!(values(&solve(m, 60)), reference, "{m}");
        }
    }
}
