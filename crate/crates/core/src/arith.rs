//! Exact binomial coefficients and small sign helpers.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

/// `C(n, k)` computed with the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` for a possibly negative top argument; zero unless `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        return BigUint::default();
    }
    binomial(n as u64, k as u64)
}

/// `(-1)^e` for an exponent given as any integer.
pub fn sign(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn signed(value: BigUint, sign: i32) -> BigInt {
    let v = BigInt::from(value);
    if sign < 0 {
        -v
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
            assert_eq!(binomial(n, 0), BigUint::one());
            assert_eq!(binomial(n, n), BigUint::one());
            assert_eq!(binomial(n, n + 1), BigUint::default());
        }
    }

    #[test]
    fn large_values() {
        assert_eq!(binomial(100, 50).to_string(), "100891344545564193334812497256");
        assert_eq!(binomial_signed(-3, 1), BigUint::default());
    }

    #[test]
    fn signs() {
        assert_eq!(sign(-3), -1);
        assert_eq!(sign(4), 1);
        assert_eq!(signed(BigUint::from(3u8), -1), BigInt::from(-3));
    }
}
