//! Exact rationals over `i64` with checked arithmetic.
//!
//! Values are always kept in lowest terms with a positive denominator and
//! serialize as the string `"p/q"`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(Ratio<i64>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(Ratio::new(numer, denom))
    }

    /// `numer/denom` taken as given; both must already be in lowest terms
    /// with `denom > 0`.
    pub const fn from_raw(numer: i64, denom: i64) -> Self {
        Rational(Ratio::new_raw(numer, denom))
    }

    pub const fn integer(n: i64) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The integer value, if the denominator is 1.
    pub fn to_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.numer())
    }

    pub fn floor(&self) -> i64 {
        num_integer::Integer::div_floor(&self.numer(), &self.denom())
    }

    pub fn ceil(&self) -> i64 {
        -num_integer::Integer::div_floor(&-self.numer(), &self.denom())
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        self.0
            .checked_add(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational sum"))
    }

    pub fn checked_sub(self, rhs: Rational) -> Result<Rational> {
        self.0
            .checked_sub(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational difference"))
    }

    pub fn checked_mul(self, rhs: Rational) -> Result<Rational> {
        self.0
            .checked_mul(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational product"))
    }

    pub fn checked_div(self, rhs: Rational) -> Result<Rational> {
        if rhs.numer() == 0 {
            return Err(Error::Overflow("rational division by zero"));
        }
        self.0
            .checked_div(&rhs.0)
            .map(Rational)
            .ok_or(Error::Overflow("rational quotient"))
    }

    /// `self * n` for an integer `n`.
    pub fn scale(self, n: i64) -> Result<Rational> {
        self.checked_mul(Rational::integer(n))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

/// `p/q`; the alternate form `{:#}` drops a denominator of 1.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if f.alternate() && self.denom() == 1 {
            return write!(f, "{}", self.numer());
        }
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "rational",
            input: s.to_string(),
        };
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p: i64 = p.parse().map_err(|_| bad())?;
        let q: i64 = q.parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        Ok(Rational::new(p, q))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An interval of rationals, each end open or closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Rational,
    pub lo_closed: bool,
    pub hi: Rational,
    pub hi_closed: bool,
}

impl Interval {
    /// `[lo, hi)`
    pub fn half_open(lo: Rational, hi: Rational) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi,
            hi_closed: false,
        }
    }

    pub fn open(lo: Rational, hi: Rational) -> Self {
        Interval {
            lo,
            lo_closed: false,
            hi,
            hi_closed: false,
        }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval {
            lo,
            lo_closed: true,
            hi,
            hi_closed: true,
        }
    }

    pub fn point(x: Rational) -> Self {
        Interval::closed(x, x)
    }

    pub fn contains(&self, x: Rational) -> bool {
        let above = match x.cmp(&self.lo) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }

    /// Scales both endpoints by the positive integer `k`.
    pub fn scaled(&self, k: i64) -> Result<Interval> {
        debug_assert!(k > 0);
        Ok(Interval {
            lo: self.lo.scale(k)?,
            hi: self.hi.scale(k)?,
            ..*self
        })
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = if f.alternate() {
            (format!("{:#}", self.lo), format!("{:#}", self.hi))
        } else {
            (self.lo.to_string(), self.hi.to_string())
        };
        if self.lo == self.hi && self.lo_closed && self.hi_closed {
            return write!(f, "{{{lo}}}");
        }
        write!(
            f,
            "{}{lo}, {hi}{}",
            if self.lo_closed { '[' } else { '(' },
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let r = Rational::new(6, -8);
        assert_eq!((r.numer(), r.denom()), (-3, 4));
        assert_eq!(r.to_string(), "-3/4");
        assert_eq!(Rational::integer(3).to_string(), "3/1");
        assert_eq!(format!("{:#}", Rational::integer(3)), "3");
        assert_eq!(format!("{:#}", Rational::new(1, 2)), "1/2");
    }

    #[test]
    fn parse_accepts_integers_and_fractions() {
        assert_eq!("7/8".parse::<Rational>().unwrap(), Rational::new(7, 8));
        assert_eq!("-4".parse::<Rational>().unwrap(), Rational::integer(-4));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_and_ceil() {
        assert_eq!(Rational::new(7, 2).floor(), 3);
        assert_eq!(Rational::new(7, 2).ceil(), 4);
        assert_eq!(Rational::new(-7, 2).floor(), -4);
        assert_eq!(Rational::new(-7, 2).ceil(), -3);
        assert_eq!(Rational::integer(5).ceil(), 5);
    }

    #[test]
    fn overflow_is_reported() {
        let big = Rational::integer(i64::MAX);
        assert_eq!(
            big.checked_add(Rational::ONE),
            Err(Error::Overflow("rational sum"))
        );
    }

    #[test]
    fn interval_membership() {
        let i = Interval::half_open(Rational::new(7, 8), Rational::ONE);
        assert!(i.contains(Rational::new(7, 8)));
        assert!(!i.contains(Rational::ONE));
        let p = Interval::point(Rational::new(3, 2));
        assert!(p.contains(Rational::new(3, 2)));
        assert_eq!(p.to_string(), "{3/2}");
        assert_eq!(i.to_string(), "[7/8, 1/1)");
    }

    #[test]
    fn serde_as_string() {
        let r = Rational::new(1, 6);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, "\"1/6\"");
        assert_eq!(serde_json::from_str::<Rational>(&s).unwrap(), r);
    }
}
