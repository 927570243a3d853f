use serde::{Deserialize, Serialize};

use super::{AffineCase, DELTA_CASES};
use crate::error::{Error, Result};
use crate::rational::{Interval, Rational};

/// The values of `lambda` at which `Delta_d` jumps, as `(p, q)`.
pub const BREAKPOINTS: [(i64, i64); 7] = [(1, 2), (2, 3), (3, 4), (5, 6), (7, 8), (1, 1), (3, 2)];

/// One linear piece of `Delta_d` on an interval of real `d0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub d0_interval: Interval,
    pub slope: i64,
    /// The intercept is `intercept_d * d + intercept_const`.
    pub intercept_d: i64,
    pub intercept_const: i64,
}

impl Segment {
    fn from_case(d: i64, c: &AffineCase) -> Result<Self> {
        Ok(Segment {
            d0_interval: c.ratio.scaled(d)?,
            slope: c.d0_coeff,
            intercept_d: c.d_coeff,
            intercept_const: c.constant,
        })
    }

    /// The linear formula of this piece at `x`, whether or not `x` lies in
    /// the interval.
    pub fn eval(&self, d: i64, x: Rational) -> Result<Rational> {
        let intercept = Rational::integer(self.intercept_d)
            .scale(d)?
            .checked_add(Rational::integer(self.intercept_const))?;
        x.scale(self.slope)?.checked_add(intercept)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discontinuity {
    pub lambda: Rational,
    /// The breakpoint `lambda * d`.
    pub d0: Rational,
    /// `Delta_d(lambda d)` minus the limit from the left.
    pub gap: Rational,
}

/// `Delta_d` as a piecewise linear function on `[d/4, 3d/2]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaProfile {
    pub d: i64,
    pub segments: Vec<Segment>,
    pub discontinuities: Vec<Discontinuity>,
}

impl DeltaProfile {
    pub fn segment_at(&self, x: Rational) -> Option<&Segment> {
        self.segments.iter().find(|s| s.d0_interval.contains(x))
    }

    /// `Delta_d(x)` for rational `x` in the domain.
    pub fn evaluate(&self, x: Rational) -> Option<Rational> {
        self.segment_at(x)
            .map(|s| s.eval(self.d, x).expect("bounded by d"))
    }

    /// Limit of `Delta_d` from the left at `x`.
    pub fn left_limit(&self, x: Rational) -> Option<Rational> {
        self.segments
            .iter()
            .find(|s| {
                let i = &s.d0_interval;
                i.lo < x && (x <= i.hi)
            })
            .map(|s| s.eval(self.d, x).expect("bounded by d"))
    }
}

pub fn delta_profile(d: i64) -> Result<DeltaProfile> {
    if d < 5 {
        return Err(Error::DTooSmall(d));
    }
    if d > crate::fibration::MAX_TYPE_PARAMETER {
        return Err(Error::Overflow("type parameter above 10^12"));
    }
    let segments = DELTA_CASES
        .iter()
        .map(|c| Segment::from_case(d, c))
        .collect::<Result<Vec<_>>>()?;
    let mut profile = DeltaProfile {
        d,
        segments,
        discontinuities: Vec::with_capacity(BREAKPOINTS.len()),
    };
    for (p, q) in BREAKPOINTS {
        let lambda = Rational::new(p, q);
        let at = lambda.scale(d)?;
        let value = profile.evaluate(at).expect("breakpoint inside the domain");
        let left = profile
            .left_limit(at)
            .expect("breakpoint has a left neighbour");
        profile.discontinuities.push(Discontinuity {
            lambda,
            d0: at,
            gap: value.checked_sub(left)?,
        });
    }
    Ok(profile)
}
