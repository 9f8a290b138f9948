use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::prob::{ExactProb, Rational};

/// A formal power series truncated after the `x^order` term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least a constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// `1 + x + x^2 + ...`
    pub fn geometric(order: usize) -> Self {
        TruncatedSeries::from_coeffs(vec![Rational::one(); order + 1])
    }

    /// `e^{-x} = sum (-1)^n x^n / n!`
    pub fn exp_neg(order: usize) -> Self {
        let mut factorial = BigInt::one();
        let coeffs = (0..=order)
            .map(|n| {
                if n > 0 {
                    factorial *= n;
                }
                let sign = if n % 2 == 0 { 1 } else { -1 };
                Rational::new(BigInt::from(sign), factorial.clone())
            })
            .collect();
        TruncatedSeries::from_coeffs(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// `c - self`
    pub fn subtract_from_constant(&self, c: Rational) -> Self {
        let mut coeffs: Vec<Rational> = self.coeffs.iter().map(|a| -a).collect();
        coeffs[0] += c;
        TruncatedSeries { coeffs }
    }

    /// Common denominator `L` and the integer coefficients `L * a_i`.
    fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let common = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, a| acc.lcm(a.denom()));
        let scaled = self
            .coeffs
            .iter()
            .map(|a| a.numer() * (&common / a.denom()))
            .collect();
        (common, scaled)
    }

    /// Cauchy product, truncated to the smaller of the two orders.
    ///
    /// Both factors are rescaled to integer coefficients first, so the
    /// convolution itself runs in integer arithmetic and each output
    /// coefficient is reduced once.
    pub fn mul_truncated(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let (da, a) = self.integer_form();
        let (db, b) = other.integer_form();
        let denom = da * db;
        let coeffs = (0..=order)
            .map(|k| {
                let num = (0..=k).fold(BigInt::zero(), |acc, j| {
                    let y = &b[k - j];
                    if y.is_zero() {
                        acc
                    } else {
                        acc + &a[j] * y
                    }
                });
                Rational::new(num, denom.clone())
            })
            .collect();
        TruncatedSeries { coeffs }
    }
}

/// Coefficients `c_0..=c_{n_max}` of `(sum x^n) * (1 - e^{-x})`, obtained by
/// multiplying the two truncated series.
pub fn gf_coefficients(n_max: usize) -> Vec<ExactProb> {
    let geometric = TruncatedSeries::geometric(n_max);
    let one_minus_exp = TruncatedSeries::exp_neg(n_max).subtract_from_constant(Rational::one());
    geometric
        .mul_truncated(&one_minus_exp)
        .into_coeffs()
        .into_iter()
        .map(ExactProb::checked)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::ratio;

    #[test]
    fn constant_term_is_zero() {
        assert_eq!(gf_coefficients(0), vec![ExactProb::zero()]);
    }

    #[test]
    fn low_order_coefficients() {
        let c = gf_coefficients(5);
        assert_eq!(c[1].value(), &ratio(1, 1));
        assert_eq!(c[2].value(), &ratio(1, 2));
        assert_eq!(c[5].value(), &ratio(19, 30));
    }

    #[test]
    fn product_with_unit_is_identity() {
        let e = TruncatedSeries::exp_neg(8);
        let mut unit = vec![Rational::zero(); 9];
        unit[0] = Rational::one();
        let unit = TruncatedSeries::from_coeffs(unit);
        assert_eq!(e.mul_truncated(&unit), e);
    }

    #[test]
    fn truncation_follows_shorter_factor() {
        let a = TruncatedSeries::geometric(3);
        let b = TruncatedSeries::geometric(7);
        let p = a.mul_truncated(&b);
        assert_eq!(p.order(), 3);
        // (1/(1-x))^2 = sum (n+1) x^n
        assert_eq!(p.coeffs()[3], ratio(4, 1));
    }
}
