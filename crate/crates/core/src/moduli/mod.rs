//! Dimensions of the strata `M_d(d0)` and the global shape of the moduli
//! space of threefolds on the Noether line with `p_g = 3d - 2`.

mod profile;
mod strata;

pub use profile::{delta_profile, DeltaProfile, Discontinuity, Segment, BREAKPOINTS};
pub use strata::{
    component_bounds, moduli_dimension, moduli_summary, stratum_range, stratum_record,
    stratum_status, ModuliSummary, StratumRecord, StratumStatus, MIN_PG,
};

use crate::fibration::FibrationType;
use crate::rational::{Interval, Rational};

/// `d_coeff * d + d0_coeff * d0 + constant`, valid for `d0/d` in `ratio`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineCase {
    pub ratio: Interval,
    pub d_coeff: i64,
    pub d0_coeff: i64,
    pub constant: i64,
}

impl AffineCase {
    pub fn eval(&self, d: i64, d0: i64) -> i64 {
        self.d_coeff * d + self.d0_coeff * d0 + self.constant
    }
}

const fn case(lo: (i64, i64), hi: (i64, i64), hi_closed: bool, c: (i64, i64, i64)) -> AffineCase {
    AffineCase {
        ratio: Interval {
            lo: Rational::from_raw(lo.0, lo.1),
            lo_closed: true,
            hi: Rational::from_raw(hi.0, hi.1),
            hi_closed,
        },
        d_coeff: c.0,
        d0_coeff: c.1,
        constant: c.2,
    }
}

/// Closed forms for `h^0` of the branch classes, by ratio `d0/d`.
pub const H0_BRANCH_CASES: [AffineCase; 7] = [
    case((1, 4), (1, 2), false, (177, -60, 25)),
    case((1, 2), (2, 3), false, (174, -54, 27)),
    case((2, 3), (3, 4), false, (170, -48, 28)),
    case((3, 4), (5, 6), false, (167, -44, 29)),
    case((5, 6), (7, 8), false, (162, -38, 30)),
    case((7, 8), (1, 1), false, (155, -30, 31)),
    case((1, 1), (3, 2), true, (125, 0, 36)),
];

/// Closed forms for the stratum dimension, by ratio `d0/d`, in increasing
/// order of `d0`.
pub const DELTA_CASES: [AffineCase; 8] = [
    case((1, 4), (1, 2), false, (169, -56, 16)),
    case((1, 2), (2, 3), false, (166, -50, 18)),
    case((2, 3), (3, 4), false, (162, -44, 19)),
    case((3, 4), (5, 6), false, (159, -40, 20)),
    case((5, 6), (7, 8), false, (154, -34, 21)),
    case((7, 8), (1, 1), false, (147, -26, 22)),
    case((1, 1), (3, 2), false, (119, 2, 26)),
    case((3, 2), (3, 2), true, (122, 0, 25)),
];

fn select<'a>(cases: &'a [AffineCase], f: &FibrationType) -> &'a AffineCase {
    let ratio = f.ratio();
    cases
        .iter()
        .find(|c| c.ratio.contains(ratio))
        .expect("valid types have d0/d in [1/4, 3/2]")
}

/// Dimension of the space of branch divisors, from the seven-case formula.
pub fn h0_branch_closed(f: &FibrationType) -> i64 {
    select(&H0_BRANCH_CASES, f).eval(f.d(), f.d0())
}

/// Dimension of the automorphism group of the divisor `z = 0`.
pub fn dim_aut_closed(f: &FibrationType) -> i64 {
    let (d, d0) = (f.d(), f.d0());
    if 2 * d0 == 3 * d {
        3 * d + 10
    } else if d0 >= d {
        6 * d - 2 * d0 + 9
    } else {
        8 * d - 4 * d0 + 8
    }
}

/// Stratum dimension read directly off the eight-case table.
pub fn delta_by_cases(f: &FibrationType) -> i64 {
    select(&DELTA_CASES, f).eval(f.d(), f.d0())
}

/// Dimension of the modular family `M_d(d0)`: `h^0 - dim Aut - 1`.
pub fn delta(f: &FibrationType) -> i64 {
    let by_difference = h0_branch_closed(f) - dim_aut_closed(f) - 1;
    debug_assert_eq!(
        by_difference,
        delta_by_cases(f),
        "delta routes disagree at {f}"
    );
    by_difference
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::validate;

    fn ft(d: i64, d0: i64) -> FibrationType {
        validate(d, d0).unwrap()
    }

    #[test]
    fn h0_examples() {
        assert_eq!(h0_branch_closed(&ft(24, 36)), 3036);
        assert_eq!(h0_branch_closed(&ft(24, 22)), 3091);
        assert_eq!(h0_branch_closed(&ft(24, 7)), 3853);
        assert_eq!(h0_branch_closed(&ft(5, 2)), 790);
    }

    #[test]
    fn dim_aut_examples() {
        assert_eq!(dim_aut_closed(&ft(24, 36)), 82);
        assert_eq!(dim_aut_closed(&ft(24, 35)), 83);
        assert_eq!(dim_aut_closed(&ft(24, 8)), 168);
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(&ft(24, 36)), 2953);
        assert_eq!(delta(&ft(24, 23)), 2952);
        assert_eq!(delta(&ft(24, 6)), 3736);
        assert_eq!(delta(&ft(5, 2)), 749);
    }

    #[test]
    fn both_delta_routes_agree_on_small_types() {
        for d in 1..=120 {
            for d0 in stratum_range(d) {
                let f = ft(d, d0);
                assert_eq!(
                    h0_branch_closed(&f) - dim_aut_closed(&f) - 1,
                    delta_by_cases(&f),
                    "{f}"
                );
            }
        }
    }

    #[test]
    fn case_tables_tile_the_ratio_range() {
        for cases in [&H0_BRANCH_CASES[..], &DELTA_CASES[..]] {
            assert_eq!(cases[0].ratio.lo, Rational::new(1, 4));
            for w in cases.windows(2) {
                assert_eq!(w[0].ratio.hi, w[1].ratio.lo);
                assert!(!w[0].ratio.hi_closed && w[1].ratio.lo_closed);
            }
            let last = cases.last().unwrap().ratio;
            assert_eq!((last.hi, last.hi_closed), (Rational::new(3, 2), true));
        }
    }
}
