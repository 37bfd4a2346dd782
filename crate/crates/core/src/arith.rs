//! Exact integer and rational helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn to_i64(v: &BigInt) -> Result<i64> {
    v.to_i64().ok_or(Error::Overflow)
}

/// Integer value of a rational that is known to be integral.
pub fn rat_to_i64(v: &Rational) -> Result<i64> {
    if !v.is_integer() {
        return Err(Error::NonIntegralVertices);
    }
    to_i64(v.numer())
}

pub fn floor_i64(v: &Rational) -> Result<i64> {
    to_i64(&v.floor().to_integer())
}

pub fn ceil_i64(v: &Rational) -> Result<i64> {
    to_i64(&v.ceil().to_integer())
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

/// `n choose 2` plus one, the lattice-point count of a curve-supporting triangle.
pub fn expected_point_count(m: u64) -> u64 {
    m * (m + 1) / 2 + 1
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Parse `P/Q`, `-P/Q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = |msg: &str| Error::Parse {
        pos: 0,
        msg: format!("{msg}: {s:?}"),
    };
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = parse_int_strict(num).ok_or_else(|| err("invalid numerator"))?;
    let den: BigInt = match den {
        Some(d) => {
            let d = parse_int_strict(d).ok_or_else(|| err("invalid denominator"))?;
            if d.is_zero() {
                return Err(err("zero denominator"));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(num, den))
}

/// An integer given in any form [`parse_rational`] accepts, so `6/2` is `3`.
pub fn parse_integer(s: &str) -> Result<BigInt> {
    let v = parse_rational(s)?;
    if !v.is_integer() {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("not an integer: {:?}", s.trim()),
        });
    }
    Ok(v.to_integer())
}

/// A pair `M,N` of integers, as taken by `--mn`.
pub fn parse_pair(s: &str) -> Result<(BigInt, BigInt)> {
    let (a, b) = s.split_once(',').ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("expected M,N: {:?}", s.trim()),
    })?;
    let first = parse_integer(a)?;
    let second = parse_integer(b).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::Parse {
            pos: a.len() + 1,
            msg,
        },
        other => other,
    })?;
    Ok((first, second))
}

fn parse_int_strict(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// `p/q` (or `p` when integral), the exact string form used in every document.
pub fn format_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Decimal rendering rounded half away from zero to `places` digits, computed exactly.
pub fn format_decimal(v: &Rational, places: u32) -> String {
    let scale = BigInt::from(10u32).pow(places);
    let scaled = v * Rational::from_integer(scale.clone());
    let neg = scaled.is_negative();
    let abs = scaled.abs();
    let rounded = (abs + rat(1, 2)).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let mut out = String::new();
    if neg && !(whole.is_zero() && frac.is_zero()) {
        out.push('-');
    }
    out.push_str(&whole.to_string());
    if places > 0 {
        let frac = frac.to_string();
        let trimmed = format!("{:0>width$}", frac, width = places as usize);
        let trimmed = trimmed.trim_end_matches('0');
        if !trimmed.is_empty() {
            out.push('.');
            out.push_str(trimmed);
        }
    }
    out
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter for arbitrary-precision integers as decimal strings.
pub mod serde_bigint {
    use num_bigint::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}
