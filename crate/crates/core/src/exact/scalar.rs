use alloc::string::String;
use alloc::string::ToString;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational; numerator and denominator are kept coprime
/// with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// Combinatorial binomial coefficient: zero unless `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Scalar {
    Scalar::from_integer(binomial_i(n, k))
}

pub fn binomial_i(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// `7`, `-3/4`.
pub fn scalar_to_string(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        let mut s = String::new();
        if c.is_negative() {
            s.push('-');
        }
        s.push_str(&c.numer().abs().to_string());
        s.push('/');
        s.push_str(&c.denom().to_string());
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(1, 2), int(0));
        assert_eq!(binomial(3, 1), int(3));
        assert_eq!(binomial(-1, 1), int(0));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
    }

    #[test]
    fn pascal_holds_on_small_grid() {
        for n in -2..=12 {
            for k in -2..=12 {
                if n == 0 && k == 0 {
                    // Pascal's rule needs binomial(-1, -1) = 1, which the
                    // combinatorial convention sets to zero.
                    continue;
                }
                assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rationals_print_reduced() {
        assert_eq!(scalar_to_string(&rat(-6, 8)), "-3/4");
        assert_eq!(scalar_to_string(&int(12)), "12");
    }
}
