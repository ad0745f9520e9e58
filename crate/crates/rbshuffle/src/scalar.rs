//! Exact scalar arithmetic: arbitrary-precision rationals, always reduced.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::errors::KernelError;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    assert!(d != 0, "zero denominator");
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `-3/4`, `7`, `0`. Decimal points and zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational, KernelError> {
    let bad = || KernelError::InvalidScalar(s.to_string());
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form: `numer/denom` in lowest terms, bare integer when the
/// denominator is one.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Exact `1/k!`.
pub fn inverse_factorial(k: u32) -> Rational {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    Rational::new(BigInt::one(), f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-7", "3/2", "-3/2", "1/3"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), frac(2, 3));
        assert_eq!(format_rational(&frac(4, 6)), "2/3");
        assert_eq!(format_rational(&frac(3, -2)), "-3/2");
    }

    #[test]
    fn rejects_bad_literals() {
        for s in ["", "1.5", "1/0", "a", "1/", "/2", "--3"] {
            assert!(parse_rational(s).is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn inverse_factorials() {
        assert_eq!(inverse_factorial(0), rat(1));
        assert_eq!(inverse_factorial(1), rat(1));
        assert_eq!(inverse_factorial(4), frac(1, 24));
    }
}
