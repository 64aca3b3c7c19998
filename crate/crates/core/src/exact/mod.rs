//! Exact rational arithmetic, divisor functions, and the multiple-cover
//! series inversions that turn Gromov-Witten series into integer counts.

mod arith;
mod series;

pub use arith::{moebius, sigma};
pub use series::{
    extract_genus1_bps, extract_genus1_bps_tilde, genus1_forward, genus1_tilde_forward,
    invert_multi_cover, multi_cover_forward, DegreeSeries,
};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / 1`.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p/q` or a plain integer. `line` only feeds the diagnostic.
pub fn parse_rational(text: &str, line: usize) -> Result<Rational> {
    let err = || Error::Parse {
        line,
        text: text.to_string(),
    };
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or `p` when the value is an integer.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let x = frac(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(frac(1, 3) + frac(1, 6), frac(1, 2));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6", 1).unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("42", 1).unwrap(), int(42));
        let huge = "66074146583335641807745540088333857250772567526848951526";
        assert_eq!(format_rational(&parse_rational(huge, 1).unwrap()), huge);
        assert_eq!(format_rational(&frac(-7, 8)), "-7/8");
        assert!(matches!(
            parse_rational("1/0", 4),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(parse_rational("abc", 1).is_err());
        assert!(parse_rational("1.5", 1).is_err());
        assert!(parse_rational("", 1).is_err());
    }
}
