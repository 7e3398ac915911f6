//! Exact rationals and their canonical text form.
//!
//! Every rational that leaves the process is written as `"p/q"` with
//! `q > 0` and `gcd(p, q) = 1`, including integers (`"3/1"`). The parser
//! accepts only that canonical form, so a parse/serialize round trip is the
//! identity on strings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_canonical_string(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RationalParseError {
    #[error("expected \"p/q\", got {0:?}")]
    Shape(String),
    #[error("non-canonical rational {0:?} (need q > 0 and lowest terms)")]
    NonCanonical(String),
}

pub fn parse_canonical(s: &str) -> Result<Rational, RationalParseError> {
    let (n, d) = s
        .split_once('/')
        .ok_or_else(|| RationalParseError::Shape(s.to_owned()))?;
    let digits = |t: &str, signed: bool| {
        let body = if signed { t.strip_prefix('-').unwrap_or(t) } else { t };
        !body.is_empty()
            && body.bytes().all(|b| b.is_ascii_digit())
            && (body == "0" || !body.starts_with('0'))
    };
    if !digits(n, true) || !digits(d, false) || n == "-0" {
        return Err(RationalParseError::Shape(s.to_owned()));
    }
    let numer: BigInt = n.parse().map_err(|_| RationalParseError::Shape(s.to_owned()))?;
    let denom: BigInt = d.parse().map_err(|_| RationalParseError::Shape(s.to_owned()))?;
    if !denom.is_positive() || !numer.gcd(&denom).is_one() {
        // 0/1 is the only canonical zero
        if !(numer.is_zero() && denom.is_one()) {
            return Err(RationalParseError::NonCanonical(s.to_owned()));
        }
    }
    Ok(Rational::new_raw(numer, denom))
}

/// Serde adapter for a single rational stored as a canonical string.
pub mod serde_rational {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&to_canonical_string(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_canonical(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter for a list of rationals.
pub mod serde_rational_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_canonical_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|s| parse_canonical(s).map_err(serde::de::Error::custom))
            .collect()
    }
}
