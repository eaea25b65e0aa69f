//! Arbitrary-precision rationals and the extended real line ℝ ∪ {−∞, +∞}.
//!
//! Every quantity in this crate is exact: values are `num::BigRational`
//! (canonical reduced form, positive denominator) and extended values are an
//! explicit three-way enum. The conventions used throughout:
//!
//! * total order: −∞ < every finite value < +∞
//! * `0 · (±∞) = 0`, `c · (±∞) = ±∞` for c > 0 (and the flipped infinity
//!   for c < 0)
//! * `(+∞) + (−∞)` is not a value; [`ExtReal::checked_add`] reports it as
//!   [`OppositeInfinities`] instead of silently picking a convention
//! * infimum of an empty collection is +∞, supremum of an empty collection
//!   is −∞

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number in canonical form (reduced, denominator > 0).
pub type Rational = BigRational;

/// Shorthand for a rational from small integers. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer-valued rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Error from [`parse_rational`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}")]
    Malformed(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
}

/// Parses `"p/q"` or a bare integer `"p"` into a canonical rational.
///
/// Rejects zero denominators instead of panicking, which is why this exists
/// rather than using `BigRational::from_str` directly.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |t: &str| -> Result<BigInt, ParseRationalError> {
        BigInt::from_str(t.trim()).map_err(|_| ParseRationalError::Malformed(s.to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let num = parse_int(p)?;
            let den = parse_int(q)?;
            if den.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(s.to_string()));
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// The extended real line. Derived `Ord` gives the intended total order
/// because the variants are declared in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtReal {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// Attempted `(+∞) + (−∞)` (in either order).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("undefined sum of opposite infinities")]
pub struct OppositeInfinities;

impl ExtReal {
    pub fn finite(q: Rational) -> Self {
        ExtReal::Finite(q)
    }

    pub fn from_int(n: i64) -> Self {
        ExtReal::Finite(rat_int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_pos_inf(&self) -> bool {
        matches!(self, ExtReal::PosInf)
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, ExtReal::NegInf)
    }

    /// The finite payload, if any.
    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Finite(q) => Some(q),
            _ => None,
        }
    }

    /// Extended addition. The only undefined combination is a pair of
    /// opposite infinities.
    pub fn checked_add(&self, other: &ExtReal) -> Result<ExtReal, OppositeInfinities> {
        use ExtReal::*;
        match (self, other) {
            (PosInf, NegInf) | (NegInf, PosInf) => Err(OppositeInfinities),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (Finite(a), Finite(b)) => Ok(Finite(a + b)),
        }
    }

    /// Extended scaling with the convention `0 · (±∞) = 0`. A negative
    /// scalar flips an infinity.
    pub fn scale(&self, c: &Rational) -> ExtReal {
        use ExtReal::*;
        match self {
            Finite(a) => Finite(a * c),
            inf => {
                if c.is_zero() {
                    Finite(Rational::zero())
                } else if c.is_positive() {
                    inf.clone()
                } else if matches!(inf, PosInf) {
                    NegInf
                } else {
                    PosInf
                }
            }
        }
    }

    pub fn neg(&self) -> ExtReal {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::PosInf => ExtReal::NegInf,
            ExtReal::Finite(q) => ExtReal::Finite(-q),
        }
    }
}

/// Extended addition as a free function, mirroring [`ExtReal::checked_add`].
pub fn ext_add(a: &ExtReal, b: &ExtReal) -> Result<ExtReal, OppositeInfinities> {
    a.checked_add(b)
}

/// Extended scaling as a free function, mirroring [`ExtReal::scale`].
pub fn ext_scale(a: &ExtReal, c: &Rational) -> ExtReal {
    a.scale(c)
}

/// Infimum of a finite collection; +∞ when the collection is empty.
pub fn ext_inf<I: IntoIterator<Item = ExtReal>>(values: I) -> ExtReal {
    values
        .into_iter()
        .fold(ExtReal::PosInf, |acc, v| if v < acc { v } else { acc })
}

/// Supremum of a finite collection; −∞ when the collection is empty.
pub fn ext_sup<I: IntoIterator<Item = ExtReal>>(values: I) -> ExtReal {
    values
        .into_iter()
        .fold(ExtReal::NegInf, |acc, v| if v > acc { v } else { acc })
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::PosInf => f.write_str("+inf"),
            ExtReal::Finite(q) => write!(f, "{}", q),
        }
    }
}

/// Error from parsing an [`ExtReal`] literal.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseExtRealError {
    #[error(transparent)]
    Rational(#[from] ParseRationalError),
}

impl FromStr for ExtReal {
    type Err = ParseExtRealError;

    /// Accepts exactly `"-inf"`, `"+inf"`, or a rational literal.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" => Ok(ExtReal::NegInf),
            "+inf" => Ok(ExtReal::PosInf),
            other => Ok(ExtReal::Finite(parse_rational(other)?)),
        }
    }
}

// JSON encoding: infinities are the exact strings "+inf"/"-inf"; finite
// values are bare integers when they fit in i64 with denominator 1, and
// "p/q" strings otherwise.

fn rational_to_json(q: &Rational) -> serde_json::Value {
    if q.is_integer() {
        if let Some(n) = q.numer().to_string().parse::<i64>().ok() {
            return serde_json::Value::from(n);
        }
    }
    serde_json::Value::from(format_rational(q))
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtReal::NegInf => serializer.serialize_str("-inf"),
            ExtReal::PosInf => serializer.serialize_str("+inf"),
            ExtReal::Finite(q) => rational_to_json(q).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(deserializer)?;
        match v {
            serde_json::Value::Number(n) => {
                if let Some(i) = n.as_i64() {
                    Ok(ExtReal::from_int(i))
                } else {
                    Err(de::Error::custom(format!(
                        "non-integer number {n} is not an exact extended real; use \"p/q\""
                    )))
                }
            }
            serde_json::Value::String(s) => {
                ExtReal::from_str(&s).map_err(|e| de::Error::custom(e.to_string()))
            }
            other => Err(de::Error::custom(format!(
                "expected rational, \"+inf\", or \"-inf\", got {other}"
            ))),
        }
    }
}

/// Field-level serde adapter for bare [`Rational`] fields, keeping the same
/// wire form as finite [`ExtReal`] values.
pub mod rational_serde {
    use super::*;

    pub fn serialize<S: Serializer>(q: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        rational_to_json(q).serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rational, D::Error> {
        match ExtReal::deserialize(deserializer)? {
            ExtReal::Finite(q) => Ok(q),
            inf => Err(de::Error::custom(format!("expected finite rational, got {inf}"))),
        }
    }
}
