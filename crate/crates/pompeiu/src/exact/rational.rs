//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the
//! canonical form we require everywhere: numerator and denominator coprime,
//! denominator positive, zero stored as 0/1. The helpers here cover
//! construction from machine integers and the "p/q" text form used by the
//! TOML/JSON interfaces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Rational from a machine integer.
pub fn rat_i(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `num/den`. Panics when `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    BadInteger(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parse `"p"` or `"p/q"` with optional sign; whitespace around parts is ignored.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RationalParseError::Empty);
    }
    let (num_text, den_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let num: BigInt = num_text
        .parse()
        .map_err(|_| RationalParseError::BadInteger(num_text.to_owned()))?;
    let den: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| RationalParseError::BadInteger(d.to_owned()))?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(RationalParseError::ZeroDenominator(trimmed.to_owned()));
    }
    Ok(BigRational::new(num, den))
}

/// Render as `"p"` for integers and `"p/q"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Nearest f64; exact big values saturate like `BigRational::to_f64`.
pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_positive() {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for text in ["0", "5", "-3", "3/5", "-7/2", "10/4"] {
            let r = parse_rational(text).unwrap();
            let back = parse_rational(&format_rational(&r)).unwrap();
            assert_eq!(r, back);
        }
        // canonicalization happens on parse
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&parse_rational("-4/2").unwrap()), "-2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!(
            parse_rational("3/0"),
            Err(RationalParseError::ZeroDenominator(_))
        ));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn canonical_invariants_hold_after_arithmetic() {
        let a = rat(6, 4);
        let b = rat(-2, 3);
        let s = &a + &b; // 3/2 - 2/3 = 5/6
        assert_eq!(s, rat(5, 6));
        assert!(s.denom().is_positive());
        let z = &a - &a;
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
    }
}
