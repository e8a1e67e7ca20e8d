use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremConstants<T> {
    pub coefficient: T,
    pub exponent: T,
}

fn check(r: usize, m: usize) -> Result<()> {
    if r < 3 || m < 2 {
        return Err(Error::arg(format!("need r >= 3 and m >= 2, got r = {r}, m = {m}")));
    }
    Ok(())
}

fn pow2(k: usize) -> BigUint {
    BigUint::from(1u8) << k
}

/// `r m 2^(r+2)`, the per-level loss of the even expansion.
pub fn even_base(r: usize, m: usize) -> BigUint {
    BigUint::from(r * m) * pow2(r + 2)
}

/// `m 2^(r+3)`, the per-level supply factor of the even expansion.
pub fn even_supply_base(r: usize, m: usize) -> BigUint {
    BigUint::from(m) * pow2(r + 3)
}

/// `p = 2mr`.
pub fn odd_p(r: usize, m: usize) -> usize {
    2 * m * r
}

/// `(mpr)^m`, the degree splitting `Q^+` from `Q^-` in the odd expansion.
pub fn odd_heavy_degree(r: usize, m: usize, p: usize) -> BigUint {
    BigUint::from(m * p * r).pow(m as u32)
}

/// `c = 2^(r+2) (mpr)^m` with `p = 2mr`.
pub fn odd_c(r: usize, m: usize) -> BigUint {
    pow2(r + 2) * odd_heavy_degree(r, m, odd_p(r, m))
}

/// Exact coefficient of the `n^(1+1/m)` bound: `2m^(r-1)(rm2^(r+2))^m` for even cycles and
/// `2m^(r-1)c^m` for odd ones.
pub fn theorem_coefficient(r: usize, m: usize, parity: Parity) -> Result<BigUint> {
    check(r, m)?;
    let lead = BigUint::from(2u8) * BigUint::from(m).pow(r as u32 - 1);
    let base = match parity {
        Parity::Even => even_base(r, m),
        Parity::Odd => odd_c(r, m),
    };
    Ok(lead * base.pow(m as u32))
}

/// Coefficient and exponent `1 + 1/m` in the scalar `T`, computed with `T` arithmetic.
pub fn theorem_constants<T: Scalar>(r: usize, m: usize, parity: Parity) -> Result<TheoremConstants<T>> {
    check(r, m)?;
    let int = |v: usize| T::from_usize(v);
    let two_pow = |k: usize| int(2).pow(k as u32);
    let base = match parity {
        Parity::Even => int(r * m) * two_pow(r + 2),
        Parity::Odd => two_pow(r + 2) * int(m * odd_p(r, m) * r).pow(m as u32),
    };
    let coefficient = int(2) * int(m).pow(r as u32 - 1) * base.pow(m as u32);
    let exponent = T::one() + T::from_ratio(1, m as i64);
    Ok(TheoremConstants { coefficient, exponent })
}

/// `c_h = 1/(rm2^(r+2))^h`.
pub fn expansion_factor<T: Scalar>(r: usize, m: usize, h: usize) -> T {
    let base = T::from_usize(r * m) * T::from_i64(2).pow(r as u32 + 2);
    T::one() / base.pow(h as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{BigRational, Rational};

    #[test]
    fn small_case_values() {
        assert_eq!(theorem_coefficient(3, 2, Parity::Even).unwrap(), BigUint::from(294912u32));
        assert_eq!(odd_p(3, 2), 12);
        assert_eq!(odd_c(3, 2), BigUint::from(165888u32));
        assert_eq!(theorem_coefficient(3, 2, Parity::Odd).unwrap(), BigUint::from(220150628352u64));
        let c: TheoremConstants<Rational> = theorem_constants(3, 2, Parity::Odd).unwrap();
        assert_eq!(c.coefficient, Rational::from_integer(220150628352));
        assert_eq!(c.exponent, Rational::new(3, 2));
        let c: TheoremConstants<f64> = theorem_constants(3, 2, Parity::Even).unwrap();
        assert_eq!(c.coefficient, 294912.0);
        assert_eq!(expansion_factor::<Rational>(3, 2, 1), Rational::new(1, 192));
        assert_eq!(expansion_factor::<BigRational>(3, 2, 0), BigRational::from_integer(1.into()));
        assert!(theorem_coefficient(2, 2, Parity::Even).is_err());
    }
}
