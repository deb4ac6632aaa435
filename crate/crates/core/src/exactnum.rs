//! Exact integer and rational arithmetic.
//!
//! Every bound in the crate is carried as an [`ExactRational`] and floored
//! only when it is reported. Floating point never enters this module except
//! through [`to_f64_checked`], which the theta module uses to compare exact
//! quantities against solver output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

pub fn int(v: i64) -> ExactInt {
    BigInt::from(v)
}

pub fn ratio(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> Result<ExactRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(num.into(), den))
}

pub fn from_int(v: impl Into<ExactInt>) -> ExactRational {
    BigRational::from_integer(v.into())
}

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Signed-argument binomial: zero whenever `n < 0`.
pub fn binomial_i(n: i64, k: i64) -> ExactInt {
    if n < 0 {
        BigInt::zero()
    } else {
        binomial(n as u64, k)
    }
}

pub fn pow(base: u64, exp: u32) -> ExactInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

/// `⌊num / den⌋` for a positive denominator.
pub fn floor_div(num: &ExactInt, den: &ExactInt) -> Result<ExactInt> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if den.is_negative() {
        return Err(Error::domain("floor_div requires a positive denominator"));
    }
    Ok(num.div_floor(den))
}

pub fn floor(r: &ExactRational) -> ExactInt {
    r.numer().div_floor(r.denom())
}

/// Renders as `p/q`, including `q = 1`.
pub fn render_rational(r: &ExactRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Result<ExactRational> {
    let bad = || Error::domain(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => ratio(
            p.trim().parse::<BigInt>().map_err(|_| bad())?,
            q.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => Ok(from_int(s.trim().parse::<BigInt>().map_err(|_| bad())?)),
    }
}

/// Converts to `f64`, failing if the value is not finite or loses integer precision
/// beyond 2^53 relative accuracy.
pub fn to_f64_checked(r: &ExactRational) -> Result<f64> {
    let num = r.numer().to_f64();
    let den = r.denom().to_f64();
    match (num, den) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() && d != 0.0 => Ok(n / d),
        _ => Err(Error::domain(format!(
            "{} does not fit in a double",
            render_rational(r)
        ))),
    }
}

pub fn int_to_f64_checked(v: &ExactInt) -> Result<f64> {
    to_f64_checked(&from_int(v.clone()))
}

/// `Σ_{i=0}^{r} C(n, i) (q-1)^i`, the size of a radius-`r` Hamming ball.
pub fn ball_size(q: u64, n: u64, r: i64) -> ExactInt {
    (0..=r.max(-1))
        .map(|i| binomial(n, i) * pow(q - 1, i as u32))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(8, 3), int(56));
        assert_eq!(binomial(4, 7), int(0));
        assert_eq!(binomial(5, 0), int(1));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(64, 32), "1832624140942590534".parse::<BigInt>().unwrap());
    }

    #[test]
    fn floor_div_examples() {
        assert_eq!(floor_div(&int(256), &int(9)).unwrap(), int(28));
        assert_eq!(floor_div(&int(56), &int(6)).unwrap(), int(9));
        assert_eq!(floor_div(&int(81), &int(9)).unwrap(), int(9));
        assert_eq!(floor_div(&int(-7), &int(2)).unwrap(), int(-4));
        assert_eq!(floor_div(&int(1), &int(0)), Err(Error::ZeroDenominator));
    }

    #[test]
    fn rationals_stay_reduced() {
        let r = ratio(int(256), int(-14)).unwrap();
        assert_eq!(render_rational(&r), "-128/7");
        assert_eq!(render_rational(&from_int(int(16))), "16/1");
        assert_eq!(parse_rational("256/14").unwrap(), ratio(int(128), int(7)).unwrap());
        assert_eq!(floor(&r), int(-19));
        assert!(ratio(int(1), int(0)).is_err());
    }

    #[test]
    fn large_powers_are_exact() {
        let big = pow(16, 64);
        assert_eq!(big, num_traits::pow(BigInt::from(2), 256));
        assert_eq!(&big / pow(16, 63), int(16));
        assert!(to_f64_checked(&from_int(big)).is_ok());
        assert!(to_f64_checked(&from_int(pow(2, 2000))).is_err());
    }

    #[test]
    fn ball_sizes() {
        assert_eq!(ball_size(2, 5, 1), int(6));
        assert_eq!(ball_size(2, 8, 1), int(9));
        assert_eq!(ball_size(3, 4, 1), int(9));
        assert_eq!(ball_size(2, 8, -1), int(0));
    }

    #[test]
    fn pascal_identity() {
        for n in 1..=40u64 {
            for k in 0..=n as i64 {
                assert_eq!(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1));
            }
        }
    }

    #[test]
    fn improved_denominator_identity() {
        // 2·Σ_{i≤m} C(n−1,i) − Σ_{i≤m} C(n,i) = C(n−1,m)
        for n in 1..=40u64 {
            for m in 0..n as i64 {
                let lhs: ExactInt = (0..=m).map(|i| int(2) * binomial(n - 1, i) - binomial(n, i)).sum();
                assert_eq!(lhs, binomial(n - 1, m), "n={n} m={m}");
            }
        }
    }

    proptest! {
        #[test]
        fn binomial_matches_factorial_ratio(n in 0u64..60, k in 0i64..60) {
            let fact = |m: u64| -> ExactInt { (1..=m).map(BigInt::from).product() };
            let expected = if k as u64 > n { int(0) } else { fact(n) / (fact(k as u64) * fact(n - k as u64)) };
            prop_assert_eq!(binomial(n, k), expected);
        }

        #[test]
        fn floor_div_brackets_quotient(num in -10_000i64..10_000, den in 1i64..500) {
            let f = floor_div(&int(num), &int(den)).unwrap();
            prop_assert!(&f * int(den) <= int(num));
            prop_assert!((f + 1) * int(den) > int(num));
        }
    }
}
