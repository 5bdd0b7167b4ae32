//! Exact rational scalars and their canonical text form.
//!
//! Every scalar is a [`BigRational`], which is kept in lowest terms with a
//! positive denominator. The text form used in documents and reports is
//! always `p/q`; on input the integer shorthand `p` is also accepted.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Canonical text form `p/q`.
pub fn format(s: &Scalar) -> String {
    format!("{}/{}", s.numer(), s.denom())
}

fn parse_digits(s: &str, allow_zero: bool) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    if s.len() > 1 && s.starts_with('0') {
        return None;
    }
    if !allow_zero && s == "0" {
        return None;
    }
    s.parse().ok()
}

/// Parses a canonical rational: `-?digits(/digits)?`, denominator positive,
/// lowest terms, no leading zeros, no `-0`.
pub fn parse(text: &str) -> Result<Scalar> {
    let bad = || Error::BadRational(text.to_string());
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num_text, den_text) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let numer = parse_digits(num_text, true).ok_or_else(bad)?;
    let denom = match den_text {
        Some(d) => parse_digits(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if negative && numer.is_zero() {
        return Err(bad());
    }
    if !numer.gcd(&denom).is_one() && !(numer.is_zero() && denom.is_one()) {
        return Err(bad());
    }
    let numer = if negative { -numer } else { numer };
    debug_assert!(denom.is_positive());
    Ok(BigRational::new_raw(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        assert_eq!(parse("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse("-3/4").unwrap(), frac(-3, 4));
        assert_eq!(parse("7").unwrap(), int(7));
        assert_eq!(parse("0").unwrap(), int(0));
        assert_eq!(parse("0/1").unwrap(), int(0));
        assert_eq!(parse("5/1").unwrap(), int(5));
    }

    #[test]
    fn rejects_non_canonical() {
        for s in [
            "1/-2", "2/4", "-0", "0/2", "01", "1/0", "", "+1", "1/", "/2", "1.5", "a", "1/02",
        ] {
            assert!(matches!(parse(s), Err(Error::BadRational(_))), "{s}");
        }
    }

    #[test]
    fn format_is_always_a_fraction() {
        assert_eq!(format(&int(-2)), "-2/1");
        assert_eq!(format(&frac(6, -4)), "-3/2");
        assert_eq!(format(&zero()), "0/1");
    }

    proptest::proptest! {
        #[test]
        fn format_parse_roundtrip(p in -1000i64..1000, q in 1i64..1000) {
            let s = frac(p, q);
            proptest::prop_assert_eq!(parse(&format(&s)).unwrap(), s);
        }
    }
}
