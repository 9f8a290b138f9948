use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::prob::{ExactProb, Rational};

/// Derangement counts `d_n` next to `n!`, for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerangementTable {
    d: Vec<BigUint>,
    factorial: Vec<BigUint>,
}

impl DerangementTable {
    pub fn n_max(&self) -> usize {
        self.d.len() - 1
    }

    pub fn d(&self) -> &[BigUint] {
        &self.d
    }

    pub fn factorial(&self) -> &[BigUint] {
        &self.factorial
    }
}

/// `d_n = (n-1)(d_{n-1} + d_{n-2})` with `d_0 = 1`, `d_1 = 0`.
pub fn derangements(n_max: usize) -> DerangementTable {
    let mut d = Vec::with_capacity(n_max + 1);
    let mut factorial = Vec::with_capacity(n_max + 1);
    d.push(BigUint::one());
    factorial.push(BigUint::one());
    if n_max >= 1 {
        d.push(BigUint::zero());
        factorial.push(BigUint::one());
    }
    for n in 2..=n_max {
        let next = (&d[n - 1] + &d[n - 2]) * (n - 1);
        d.push(next);
        let f = &factorial[n - 1] * n;
        factorial.push(f);
    }
    DerangementTable { d, factorial }
}

/// `d_n / n!`, the probability that a uniform permutation of `n` items has no
/// fixed point.
pub fn derangement_prob(n: usize, table: &DerangementTable) -> Result<ExactProb> {
    if n > table.n_max() {
        return Err(Error::IndexOutOfRange {
            n,
            n_max: table.n_max(),
        });
    }
    Ok(ExactProb::checked(Rational::new(
        table.d[n].clone().into(),
        table.factorial[n].clone().into(),
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prob::ratio;

    #[test]
    fn first_values() {
        let t = derangements(1);
        assert_eq!(t.d(), &[BigUint::from(1u32), BigUint::from(0u32)]);
        let t = derangements(4);
        let d: Vec<u32> = t.d().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 0, 1, 2, 9]);
        assert_eq!(t.factorial()[4], BigUint::from(24u32));
    }

    #[test]
    fn tenth_value() {
        let t = derangements(10);
        assert_eq!(t.d()[10], BigUint::from(1_334_961u32));
        assert_eq!(t.factorial()[10], BigUint::from(3_628_800u32));
        assert_eq!(t.n_max(), 10);
    }

    #[test]
    fn probabilities() {
        let t = derangements(3);
        assert_eq!(derangement_prob(0, &t).unwrap(), ExactProb::one());
        assert_eq!(derangement_prob(2, &t).unwrap().value(), &ratio(1, 2));
        assert_eq!(derangement_prob(3, &t).unwrap().value(), &ratio(1, 3));
        assert_eq!(
            derangement_prob(4, &t).unwrap_err(),
            Error::IndexOutOfRange { n: 4, n_max: 3 }
        );
    }
}
