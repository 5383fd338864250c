//! Exact extended-rational arithmetic for costs and budgets.
//!
//! All monetary quantities in the library are exact rationals; `+inf` marks
//! prohibited edge modifications and unbounded budgets. Text form is `"p"`,
//! `"p/q"`, or `"inf"` — the same representation the JSON formats use.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::Rational64;

/// A nonnegative cost: a finite rational or positive infinity.
///
/// Infinity absorbs addition and compares greater than every finite value,
/// so summing a modification that touches a prohibited pair can never look
/// affordable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cost {
    Finite(Rat),
    Infinite,
}

impl Cost {
    pub const ZERO: Cost = Cost::Finite(Rat::new_raw(0, 1));

    pub fn from_int(v: i64) -> Cost {
        Cost::Finite(Rat::from_integer(v))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Cost::Finite(r) if r.numer() == &0)
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<Rat> {
        match self {
            Cost::Finite(r) => Some(*r),
            Cost::Infinite => None,
        }
    }
}

impl From<Rat> for Cost {
    fn from(r: Rat) -> Cost {
        Cost::Finite(r)
    }
}

impl Add for Cost {
    type Output = Cost;

    fn add(self, rhs: Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }
}

impl AddAssign for Cost {
    fn add_assign(&mut self, rhs: Cost) {
        *self = *self + rhs;
    }
}

impl Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, Add::add)
    }
}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Cost) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Cost) -> Ordering {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => a.cmp(b),
            (Cost::Finite(_), Cost::Infinite) => Ordering::Less,
            (Cost::Infinite, Cost::Finite(_)) => Ordering::Greater,
            (Cost::Infinite, Cost::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(r) => write!(f, "{r}"),
            Cost::Infinite => write!(f, "inf"),
        }
    }
}

/// Error for unparseable rational/cost strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational '{text}': {reason}")]
pub struct ParseRatError {
    pub text: String,
    pub reason: String,
}

fn parse_error(text: &str, reason: impl Into<String>) -> ParseRatError {
    ParseRatError {
        text: text.to_string(),
        reason: reason.into(),
    }
}

/// Parses `"p"` or `"p/q"` into an exact rational.
pub fn parse_rat(text: &str) -> Result<Rat, ParseRatError> {
    let trimmed = text.trim();
    Rat::from_str(trimmed).map_err(|e| parse_error(text, e.to_string()))
}

impl FromStr for Cost {
    type Err = ParseRatError;

    fn from_str(s: &str) -> Result<Cost, ParseRatError> {
        let trimmed = s.trim();
        if trimmed.eq_ignore_ascii_case("inf") {
            return Ok(Cost::Infinite);
        }
        let r = parse_rat(trimmed)?;
        if r < Rat::from_integer(0) {
            return Err(parse_error(s, "costs must be nonnegative"));
        }
        Ok(Cost::Finite(r))
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Cost {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Cost, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}

/// Serde adapter for plain `Rat` fields stored as `"p"`/`"p/q"` strings.
pub mod rat_string {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rat, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Rat, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rat(&text).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_fractions_and_inf() {
        assert_eq!("3".parse::<Cost>().unwrap(), Cost::from_int(3));
        assert_eq!(
            "3/2".parse::<Cost>().unwrap(),
            Cost::Finite(Rat::new(3, 2))
        );
        assert_eq!("inf".parse::<Cost>().unwrap(), Cost::Infinite);
        assert_eq!(" 7/4 ".parse::<Cost>().unwrap(), Cost::Finite(Rat::new(7, 4)));
    }

    #[test]
    fn rejects_negative_and_garbage() {
        assert!("-1".parse::<Cost>().is_err());
        assert!("1/0".parse::<Cost>().is_err());
        assert!("abc".parse::<Cost>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["0", "5", "3/2", "inf"] {
            let c: Cost = text.parse().unwrap();
            assert_eq!(c.to_string(), text);
            assert_eq!(c.to_string().parse::<Cost>().unwrap(), c);
        }
    }

    #[test]
    fn infinity_absorbs_and_dominates() {
        let one = Cost::from_int(1);
        assert_eq!(one + Cost::Infinite, Cost::Infinite);
        assert_eq!(Cost::Infinite + Cost::Infinite, Cost::Infinite);
        assert!(one < Cost::Infinite);
        assert!(Cost::Infinite <= Cost::Infinite);
        let total: Cost = [one, Cost::from_int(2)].into_iter().sum();
        assert_eq!(total, Cost::from_int(3));
    }
}
