//! Textual forms: rationals print as `p/q` (or `p` when `q = 1`).

use super::{Integer, Rational};
use crate::error::{Error, Result};
use num_traits::One;
use serde::{Deserialize, Deserializer, Serializer};

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidParameter(format!("not a rational: {text:?}"));
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: Integer = p.trim().parse().map_err(|_| bad())?;
            let q: Integer = q.trim().parse().map_err(|_| bad())?;
            if q == Integer::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

pub fn serialize_rational<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(q))
}

pub fn deserialize_rational<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
    let text = String::deserialize(d)?;
    parse_rational(&text).map_err(serde::de::Error::custom)
}

pub fn serialize_integer<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

pub fn deserialize_integer<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Integer, D::Error> {
    let text = String::deserialize(d)?;
    text.trim().parse().map_err(serde::de::Error::custom)
}

/// Decimal strings, since table values leave the 64-bit range quickly.
pub fn integers_to_strings(values: &[Integer]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn formats_and_parses() {
        assert_eq!(format_rational(&rat(47, 72)), "47/72");
        assert_eq!(format_rational(&rat(-6, 3)), "-2");
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("12").unwrap(), rat(12, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
