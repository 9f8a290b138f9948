//! Exact rational carriers.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with
//! a positive denominator. [`ExactProb`] narrows it to the closed interval
//! `[0, 1]`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision fraction.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Nearest double to an exact rational.
pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// An exact probability in `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactProb(Rational);

impl ExactProb {
    pub fn new(value: Rational) -> Result<Self> {
        if value < Rational::zero() || value > Rational::one() {
            return Err(Error::NotAProbability(value.to_string()));
        }
        Ok(ExactProb(value))
    }

    /// Wraps a value produced by an internal computation that is known to be
    /// a probability. Panics if it is not.
    pub(crate) fn checked(value: Rational) -> Self {
        match ExactProb::new(value) {
            Ok(p) => p,
            Err(e) => panic!("internal probability invariant broken: {e}"),
        }
    }

    pub fn zero() -> Self {
        ExactProb(Rational::zero())
    }

    pub fn one() -> Self {
        ExactProb(Rational::one())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    /// `1 - p`.
    pub fn complement(&self) -> Self {
        ExactProb(Rational::one() - &self.0)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.0)
    }
}

impl fmt::Display for ExactProb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<Rational> for ExactProb {
    type Error = Error;

    fn try_from(value: Rational) -> Result<Self> {
        ExactProb::new(value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_values_outside_unit_interval() {
        assert!(ExactProb::new(ratio(-1, 3)).is_err());
        assert!(ExactProb::new(ratio(4, 3)).is_err());
        assert!(ExactProb::new(ratio(0, 1)).is_ok());
        assert!(ExactProb::new(ratio(1, 1)).is_ok());
    }

    #[test]
    fn stored_reduced() {
        let p = ExactProb::new(ratio(9, 24)).unwrap();
        assert_eq!(p.numer(), &BigInt::from(3));
        assert_eq!(p.denom(), &BigInt::from(8));
        let q = ExactProb::new(ratio(-0, -5)).unwrap();
        assert_eq!(q.denom(), &BigInt::from(1));
    }

    #[test]
    fn complement_sums_to_one() {
        let p = ExactProb::new(ratio(19, 30)).unwrap();
        assert_eq!(p.value() + p.complement().value(), Rational::one());
        assert_eq!(p.complement(), ExactProb::new(ratio(11, 30)).unwrap());
    }

    #[test]
    fn float_conversion_is_nearest() {
        assert_eq!(ExactProb::new(ratio(1, 3)).unwrap().to_f64(), 1.0 / 3.0);
        assert_eq!(ExactProb::new(ratio(1, 2)).unwrap().to_f64(), 0.5);
    }
}
