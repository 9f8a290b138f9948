use num_bigint::BigInt;
use num_traits::One;

use super::win::WinTable;
use crate::error::Result;
use crate::prob::Rational;

/// Nearest double to `e^-1`.
pub const E_INV: f64 = 0.367_879_441_171_442_33;

/// Absolute slack (`2^-48`) granted to the double-precision gap check.
pub const FLOAT_SLACK: f64 = 1.0 / 281_474_976_710_656.0;

/// Distance of `D_n` from its limit `e^-1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LimitGap {
    pub n: usize,
    /// `D_n` rounded to the nearest double.
    pub d_n_float: f64,
    /// `|D_n - e^-1|` in double precision.
    pub gap: f64,
    /// `1/(n+1)!`, the first omitted term of the alternating series.
    pub bound: Rational,
}

impl LimitGap {
    /// `gap <= bound + 2^-48`.
    pub fn within_bound(&self) -> bool {
        self.gap <= crate::prob::to_f64(&self.bound) + FLOAT_SLACK
    }
}

/// `1/(n+1)!`
pub fn alternating_bound(n: usize) -> Rational {
    let factorial: BigInt = (1..=n + 1).fold(BigInt::one(), |acc, k| acc * k);
    Rational::new(BigInt::one(), factorial)
}

pub fn gap_to_limit(n: usize, table: &WinTable) -> Result<LimitGap> {
    let d_n = table.d(n)?;
    let d_n_float = d_n.to_f64();
    Ok(LimitGap {
        n,
        d_n_float,
        gap: (d_n_float - E_INV).abs(),
        bound: alternating_bound(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::exact::solve_recursive;
    use crate::prob::ratio;

    #[test]
    fn constants() {
        assert_eq!(E_INV, (-1.0f64).exp());
        assert_eq!(FLOAT_SLACK, 2f64.powi(-48));
    }

    #[test]
    fn empty_pile() {
        let g = gap_to_limit(0, &solve_recursive(0)).unwrap();
        assert_eq!(g.d_n_float, 1.0);
        assert!((g.gap - 0.632_120_558_828_557_7).abs() < 1e-15);
        assert_eq!(g.bound, ratio(1, 1));
    }

    #[test]
    fn single_element() {
        let g = gap_to_limit(1, &solve_recursive(1)).unwrap();
        assert_eq!(g.d_n_float, 0.0);
        assert_eq!(g.gap, E_INV);
        assert_eq!(g.bound, ratio(1, 2));
    }

    #[test]
    fn ten_elements() {
        let g = gap_to_limit(10, &solve_recursive(10)).unwrap();
        assert_eq!(g.d_n_float, 1_334_961.0 / 3_628_800.0);
        assert!((g.gap - 2.311e-8).abs() < 1e-11, "gap = {}", g.gap);
        assert_eq!(g.bound, ratio(1, 39_916_800));
        assert!(g.within_bound());
    }

    #[test]
    fn out_of_range() {
        assert_eq!(
            gap_to_limit(5, &solve_recursive(4)).unwrap_err(),
            Error::IndexOutOfRange { n: 5, n_max: 4 }
        );
    }
}
