use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Error;

/// A truncated formal power series with exact nonnegative integer
/// coefficients.
///
/// A series of truncation order N stores the coefficients of q^0..q^N; every
/// operation keeps coefficient m correct for all m ≤ N. Coefficients are
/// arbitrary-precision — wreath counts overflow 64 bits well within reach of
/// a desk computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntSeries {
    coeffs: Vec<BigUint>,
}

impl IntSeries {
    /// The constant series 1 at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigUint::zero(); order + 1];
        coeffs[0] = BigUint::one();
        IntSeries { coeffs }
    }

    /// Builds a series from its coefficient list (index m holds the
    /// coefficient of q^m). The list must be nonempty.
    pub fn from_coeffs(coeffs: Vec<BigUint>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least q^0");
        IntSeries { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of q^m; indices beyond the truncation order are a
    /// range error, never silently zero.
    pub fn coefficient(&self, m: usize) -> Result<&BigUint, Error> {
        self.coeffs.get(m).ok_or(Error::CoefficientOutOfRange {
            index: m,
            order: self.truncation_order(),
        })
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &IntSeries) -> IntSeries {
        assert_eq!(
            self.truncation_order(),
            rhs.truncation_order(),
            "series addition requires equal truncation orders"
        );
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        IntSeries { coeffs }
    }

    pub fn mul(&self, rhs: &IntSeries) -> IntSeries {
        assert_eq!(
            self.truncation_order(),
            rhs.truncation_order(),
            "series multiplication requires equal truncation orders"
        );
        let order = self.truncation_order();
        let mut coeffs = vec![BigUint::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntSeries { coeffs }
    }

    /// The k-th power, by binary exponentiation. `pow(0)` is the constant 1.
    pub fn pow(&self, k: usize) -> IntSeries {
        let mut result = IntSeries::one(self.truncation_order());
        let mut base = self.clone();
        let mut exp = k;
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Substitution q ↦ q^k, k ≥ 1: coefficient m moves to index k·m,
    /// dropping indices beyond the truncation order.
    pub fn substitute(&self, k: usize) -> IntSeries {
        assert!(k >= 1, "substitution requires k >= 1");
        let order = self.truncation_order();
        let mut coeffs = vec![BigUint::zero(); order + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            match m.checked_mul(k) {
                Some(idx) if idx <= order => coeffs[idx] = c.clone(),
                _ => break,
            }
        }
        IntSeries { coeffs }
    }
}

/// The generating series for `ell`-core partitions,
///
/// ```text
/// C_ell(q) = prod_{k >= 1} (1 - q^{ell k})^ell / (1 - q^k),
/// ```
///
/// truncated at `order`: coefficient m is the number of `ell`-core
/// partitions of m. Computed with signed scratch arithmetic; the final
/// coefficients are counts and the conversion back asserts nonnegativity.
pub fn core_count_series(ell: u64, order: usize) -> IntSeries {
    assert!(ell >= 2, "ell must be at least 2");
    let mut scratch: Vec<BigInt> = vec![BigInt::zero(); order + 1];
    scratch[0] = BigInt::one();
    // prod_k 1/(1 - q^k): the classical partition-counting sweep.
    for k in 1..=order {
        for m in k..=order {
            let add = scratch[m - k].clone();
            scratch[m] += add;
        }
    }
    // prod_k (1 - q^{ell k})^ell, one (1 - q^j) pass at a time.
    let ell_usize = ell as usize;
    let mut j = ell_usize;
    while j <= order {
        for _ in 0..ell_usize {
            for m in (j..=order).rev() {
                let sub = scratch[m - j].clone();
                scratch[m] -= sub;
            }
        }
        j += ell_usize;
    }
    let coeffs = scratch
        .into_iter()
        .map(|c| c.to_biguint().expect("core counts are nonnegative"))
        .collect();
    IntSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nums(values: &[u32]) -> Vec<BigUint> {
        values.iter().map(|&v| BigUint::from(v)).collect()
    }

    #[test]
    fn two_core_series_is_the_triangular_indicator() {
        let series = core_count_series(2, 10);
        assert_eq!(
            series.coefficients(),
            &nums(&[1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1])[..]
        );
    }

    #[test]
    fn order_zero_core_series_is_one() {
        for ell in [2u64, 3, 5, 7] {
            assert_eq!(core_count_series(ell, 0).coefficients(), &nums(&[1])[..]);
        }
    }

    #[test]
    fn three_core_count_of_four_is_two() {
        let series = core_count_series(3, 4);
        assert_eq!(*series.coefficient(4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn pow_zero_is_the_constant_one() {
        let series = core_count_series(3, 5);
        assert_eq!(series.pow(0), IntSeries::one(5));
    }

    #[test]
    fn pairs_of_three_cores_of_total_size_one() {
        let squared = core_count_series(3, 5).pow(2);
        assert_eq!(*squared.coefficient(1).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn substitution_spreads_coefficients() {
        let sub = core_count_series(2, 10).substitute(2);
        assert_eq!(*sub.coefficient(2).unwrap(), BigUint::from(1u32));
        assert_eq!(*sub.coefficient(1).unwrap(), BigUint::zero());
    }

    #[test]
    fn coefficient_out_of_range_is_an_error() {
        let series = IntSeries::one(3);
        assert_eq!(
            series.coefficient(4).unwrap_err(),
            Error::CoefficientOutOfRange { index: 4, order: 3 }
        );
    }
}
