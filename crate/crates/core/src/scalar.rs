//! Scalar abstraction for thresholds and constants.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, ToPrimitive};

/// Ordered field-like scalar used for degree thresholds and lemma constants.
///
/// Implemented for `f32`, `f64`, [`Ratio<i64>`] and [`BigRational`].
pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    fn to_f64(&self) -> f64;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        (num as f64 / den as f64) as f32
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Exact test of `y >= k * n^(1/m)` for nonnegative `y`, `k`, rearranged as `y^m >= k^m n`.
pub fn ge_root<T: Scalar>(y: &T, k: &T, n: usize, m: u32) -> bool {
    y.pow(m) >= k.pow(m) * T::from_usize(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_roundtrip() {
        let a = <Ratio<i64> as Scalar>::from_ratio(3, 8);
        assert_eq!(Scalar::to_f64(&a), 0.375);
        assert_eq!(a.pow(2), Ratio::new(9, 64));
    }

    #[test]
    fn root_comparison_is_exact() {
        let n = 64usize;
        // 4 = 1 * 64^(1/3)
        assert!(ge_root(&Ratio::from_integer(4i64), &Ratio::from_integer(1), n, 3));
        assert!(!ge_root(&Ratio::new(399i64, 100), &Ratio::from_integer(1), n, 3));
        assert!(ge_root(&4.0f64, &1.0, n, 3));
    }
}
