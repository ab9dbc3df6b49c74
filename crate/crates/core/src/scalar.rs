//! Supertropical scalars.
//!
//! The carrier is `R = T ∪ G ∪ {-∞}` over the exact rationals with the
//! max-plus operations. Every non-zero element has a ν-value (its rational
//! magnitude); a tangible element and its ghost share the same ν-value.
//!
//! | operation | rule |
//! |-----------|------|
//! | `a + b`   | larger ν-value wins; a tie becomes the ghost of that value |
//! | `a * b`   | ν-values add; ghost if either operand is ghost |
//! | `a.nu()`  | the ghost map, fixing ghosts and zero |
//!
//! Text form: `-inf`, `p/q` (tangible) or `p/qg` (ghost), with integers
//! printed without a denominator.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Which layer of the supertropical semiring an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Zero,
    Tangible,
    Ghost,
}

/// An element of the supertropical semifield.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    /// The additive identity `-∞`.
    Zero,
    Tangible(BigRational),
    Ghost(BigRational),
}

pub(crate) fn rational(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

impl Scalar {
    /// The multiplicative unit, tangible `0`.
    pub fn one() -> Self {
        Scalar::Tangible(BigRational::zero())
    }

    pub fn tangible(value: i64) -> Self {
        Scalar::Tangible(BigRational::from_integer(value.into()))
    }

    pub fn ghost(value: i64) -> Self {
        Scalar::Ghost(BigRational::from_integer(value.into()))
    }

    /// Tangible `numer/denom`. Panics if `denom` is zero.
    pub fn tangible_ratio(numer: i64, denom: i64) -> Self {
        Scalar::Tangible(rational(numer, denom))
    }

    /// Ghost `numer/denom`. Panics if `denom` is zero.
    pub fn ghost_ratio(numer: i64, denom: i64) -> Self {
        Scalar::Ghost(rational(numer, denom))
    }

    pub fn kind(&self) -> Kind {
        match self {
            Scalar::Zero => Kind::Zero,
            Scalar::Tangible(_) => Kind::Tangible,
            Scalar::Ghost(_) => Kind::Ghost,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Zero)
    }

    pub fn is_tangible(&self) -> bool {
        matches!(self, Scalar::Tangible(_))
    }

    pub fn is_ghost(&self) -> bool {
        matches!(self, Scalar::Ghost(_))
    }

    /// `true` for ghosts and zero, the values that count as roots.
    pub fn is_ghost_or_zero(&self) -> bool {
        !self.is_tangible()
    }

    /// The ν-value, or `None` for zero (read as `-∞`).
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            Scalar::Zero => None,
            Scalar::Tangible(v) | Scalar::Ghost(v) => Some(v),
        }
    }

    /// Compare ν-values, with zero strictly below every other element.
    pub fn cmp_nu(&self, other: &Scalar) -> Ordering {
        // `None < Some(_)` matches -∞ being the minimum.
        self.value().cmp(&other.value())
    }

    fn with_kind(kind: Kind, value: BigRational) -> Scalar {
        match kind {
            Kind::Zero => Scalar::Zero,
            Kind::Tangible => Scalar::Tangible(value),
            Kind::Ghost => Scalar::Ghost(value),
        }
    }

    /// The ghost map ν.
    pub fn nu(&self) -> Scalar {
        match self {
            Scalar::Tangible(v) => Scalar::Ghost(v.clone()),
            other => other.clone(),
        }
    }

    /// `self^k`; `k = 0` gives the unit.
    pub fn pow(&self, k: u32) -> Scalar {
        if k == 0 {
            return Scalar::one();
        }
        match self.value() {
            None => Scalar::Zero,
            Some(v) => Scalar::with_kind(self.kind(), v * BigRational::from_integer(k.into())),
        }
    }

    /// The unique `b` of the same kind with `b^k = self`.
    pub fn kth_root(&self, k: u32) -> Result<Scalar> {
        if k == 0 {
            return Err(Error::InvalidArgument("0-th root is undefined".into()));
        }
        Ok(match self.value() {
            None => Scalar::Zero,
            Some(v) => Scalar::with_kind(self.kind(), v / BigRational::from_integer(k.into())),
        })
    }

    /// Multiplicative inverse of a tangible element (negated ν-value).
    /// Ghosts and zero have no inverse.
    pub fn inverse(&self) -> Result<Scalar> {
        match self {
            Scalar::Tangible(v) => Ok(Scalar::Tangible(-v)),
            _ => Err(Error::InvalidArgument(format!("{self} is not invertible"))),
        }
    }

    /// Ghost surpassing: `self = other`, or `self` is a ghost whose ν-value
    /// is at least that of `other`.
    pub fn surpasses(&self, other: &Scalar) -> bool {
        self == other || (self.is_ghost() && self.cmp_nu(other) != Ordering::Less)
    }

    /// Supertropical sum of an iterator; zero when empty.
    pub fn sum<'a, I: IntoIterator<Item = &'a Scalar>>(items: I) -> Scalar {
        items.into_iter().fold(Scalar::Zero, |acc, x| &acc + x)
    }

    /// Supertropical product of an iterator; the unit when empty.
    pub fn product<'a, I: IntoIterator<Item = &'a Scalar>>(items: I) -> Scalar {
        items.into_iter().fold(Scalar::one(), |acc, x| &acc * x)
    }
}

impl Add for &Scalar {
    type Output = Scalar;

    fn add(self, rhs: &Scalar) -> Scalar {
        match self.cmp_nu(rhs) {
            Ordering::Greater => self.clone(),
            Ordering::Less => rhs.clone(),
            // both zero, or a tie between non-zero values
            Ordering::Equal => self.nu(),
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;

    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;

    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Zero, _) | (_, Scalar::Zero) => Scalar::Zero,
            (Scalar::Tangible(a), Scalar::Tangible(b)) => Scalar::Tangible(a + b),
            (a, b) => Scalar::Ghost(a.value().unwrap() + b.value().unwrap()),
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;

    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => f.write_str("-inf"),
            Scalar::Tangible(v) => write!(f, "{v}"),
            Scalar::Ghost(v) => write!(f, "{v}g"),
        }
    }
}

/// Parse `[-]digits[/digits]`. Errors carry 1-based columns within `s`.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(
            1,
            1,
            format!("expected an integer, found `{numer}`"),
        ));
    }
    let numer: BigInt = numer
        .parse()
        .map_err(|_| Error::parse(1, 1, format!("bad integer `{numer}`")))?;
    let denom: BigInt = match denom {
        None => BigInt::from(1),
        Some(d) => {
            let column = s.len() - d.len() + 1;
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(
                    1,
                    column,
                    format!("expected a denominator, found `{d}`"),
                ));
            }
            let d: BigInt = d
                .parse()
                .map_err(|_| Error::parse(1, column, "bad denominator"))?;
            if d.is_zero() {
                return Err(Error::parse(1, column, "zero denominator"));
            }
            d
        }
    };
    debug_assert!(!denom.is_negative());
    Ok(BigRational::new(numer, denom))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s == "-inf" {
            return Ok(Scalar::Zero);
        }
        if s.is_empty() {
            return Err(Error::parse(1, 1, "empty scalar"));
        }
        match s.strip_suffix('g') {
            Some(body) => parse_rational(body).map(Scalar::Ghost),
            None => parse_rational(s).map(Scalar::Tangible),
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(
            Scalar::tangible(3) + Scalar::tangible(5),
            Scalar::tangible(5)
        );
        assert_eq!(Scalar::tangible(2) + Scalar::tangible(2), Scalar::ghost(2));
        assert_eq!(Scalar::ghost(1) + Scalar::Zero, Scalar::ghost(1));
        assert_eq!(Scalar::tangible(4) + Scalar::ghost(4), Scalar::ghost(4));
        assert_eq!(Scalar::Zero + Scalar::Zero, Scalar::Zero);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            Scalar::tangible(1) * Scalar::tangible(2),
            Scalar::tangible(3)
        );
        assert_eq!(Scalar::ghost(2) * Scalar::tangible(3), Scalar::ghost(5));
        assert_eq!(Scalar::Zero * Scalar::ghost(7), Scalar::Zero);
    }

    #[test]
    fn pow_and_roots() {
        assert_eq!(Scalar::tangible(2).pow(2), Scalar::tangible(4));
        assert_eq!(Scalar::ghost(3).pow(2), Scalar::ghost(6));
        assert_eq!(Scalar::tangible(5).pow(0), Scalar::one());
        assert_eq!(Scalar::Zero.pow(3), Scalar::Zero);
        assert_eq!(Scalar::Zero.pow(0), Scalar::one());

        assert_eq!(
            Scalar::tangible(4).kth_root(2).unwrap(),
            Scalar::tangible(2)
        );
        assert_eq!(
            Scalar::tangible(1).kth_root(3).unwrap(),
            Scalar::tangible_ratio(1, 3)
        );
        // pow oracle: 3g squared is 6g
        assert_eq!(Scalar::ghost(3).pow(2), Scalar::ghost(6));
        assert_eq!(Scalar::ghost(6).kth_root(2).unwrap(), Scalar::ghost(3));
        assert_eq!(Scalar::Zero.kth_root(4).unwrap(), Scalar::Zero);
        assert!(Scalar::tangible(4).kth_root(0).is_err());
    }

    #[test]
    fn ghost_map() {
        assert_eq!(Scalar::tangible(5).nu(), Scalar::ghost(5));
        assert_eq!(Scalar::ghost(5).nu(), Scalar::ghost(5));
        assert_eq!(Scalar::Zero.nu(), Scalar::Zero);
    }

    #[test]
    fn surpass_examples() {
        assert!(Scalar::ghost(5).surpasses(&Scalar::tangible(4)));
        assert!(Scalar::tangible(3).surpasses(&Scalar::tangible(3)));
        assert!(!Scalar::tangible(3).surpasses(&Scalar::tangible(4)));
        assert!(!Scalar::ghost(2).surpasses(&Scalar::tangible(4)));
        assert!(Scalar::ghost(-10).surpasses(&Scalar::Zero));
        assert!(!Scalar::tangible(-10).surpasses(&Scalar::Zero));
        assert!(!Scalar::Zero.surpasses(&Scalar::tangible(0)));
    }

    #[test]
    fn text_form() {
        assert_eq!(s("-inf"), Scalar::Zero);
        assert_eq!(s("5"), Scalar::tangible(5));
        assert_eq!(s("-3/6g"), Scalar::ghost_ratio(-1, 2));
        assert_eq!(Scalar::ghost_ratio(-1, 2).to_string(), "-1/2g");
        assert_eq!(Scalar::tangible(7).to_string(), "7");
        assert_eq!(Scalar::Zero.to_string(), "-inf");
        assert_eq!(Scalar::ghost(0).to_string(), "0g");
    }

    #[test]
    fn text_errors() {
        for bad in ["", "g", "1/0", "abc", "1/", "--1", "1.5", "inf", "1/-2"] {
            assert!(bad.parse::<Scalar>().is_err(), "accepted {bad:?}");
        }
        match "3/0g".parse::<Scalar>() {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn serde_as_strings() {
        let json = serde_json::to_string(&vec![Scalar::Zero, Scalar::ghost(5)]).unwrap();
        assert_eq!(json, r#"["-inf","5g"]"#);
        let back: Vec<Scalar> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, vec![Scalar::Zero, Scalar::ghost(5)]);
    }
}
