//! Generalized binomial coefficients over the integers.
//!
//! Hilbert polynomials in the binomial basis get evaluated at small (and
//! sometimes negative) arguments, so `C(x, k)` is the falling-factorial
//! polynomial `x(x-1)...(x-k+1)/k!`, defined for any integer `x` and `k >= 0`,
//! and zero for `k < 0`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(top, k)` with the falling-factorial convention.
pub fn binomial(top: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= top - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    // Product of k consecutive integers is divisible by k!.
    num / den
}

/// Convenience wrapper for machine-integer arguments.
pub fn binom(top: i64, k: i64) -> BigInt {
    binomial(&BigInt::from(top), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinary_values() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(4, 0), BigInt::from(1));
        assert_eq!(binom(4, 4), BigInt::from(1));
        assert_eq!(binom(3, 5), BigInt::from(0));
    }

    #[test]
    fn negative_top_uses_falling_factorial() {
        assert_eq!(binom(-1, 1), BigInt::from(-1));
        assert_eq!(binom(-1, 2), BigInt::from(1));
        assert_eq!(binom(-6, 0), BigInt::from(1));
        assert_eq!(binom(-2, 3), BigInt::from(-4));
    }

    #[test]
    fn negative_k_is_zero() {
        assert_eq!(binom(7, -1), BigInt::from(0));
        assert_eq!(binom(-3, -2), BigInt::from(0));
    }

    #[test]
    fn pascal_rule() {
        for top in -6..=10i64 {
            for k in 0..=6 {
                assert_eq!(binom(top, k) + binom(top, k + 1), binom(top + 1, k + 1));
            }
        }
    }
}
