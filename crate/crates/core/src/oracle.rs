//! Brute-force re-derivation of every closed form, and range sweeps that
//! compare the two.
//!
//! Section counts here come from monomial enumeration in [`grading`] and
//! never consult the case tables in [`moduli`].

use std::collections::BTreeMap;
use std::fmt::Display;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibration::{self, FibrationType, BRANCH_FIBRE_DEGREE, VANISHING_TABLE};
use crate::grading::{self, Multidegree, Variable, XMonomial};
use crate::moduli::{self, StratumStatus, BREAKPOINTS};
use crate::rational::Rational;
use crate::sweep;

/// Rows `(d0, h0, dim Aut, Delta)` of the published table for `d = 24`.
pub const TABLE_D24: [(i64, i64, i64, i64); 12] = [
    (36, 3036, 82, 2953),
    (35, 3036, 83, 2952),
    (34, 3036, 85, 2950),
    (33, 3036, 87, 2948),
    (25, 3036, 103, 2932),
    (24, 3036, 105, 2930),
    (23, 3061, 108, 2952),
    (22, 3091, 112, 2978),
    (21, 3121, 116, 3004),
    (8, 3793, 168, 3624),
    (7, 3853, 172, 3680),
    (6, 3913, 176, 3736),
];

/// Expected discontinuity gaps, one per entry of [`BREAKPOINTS`].
pub const EXPECTED_GAPS: [i64; 7] = [2, 1, 1, 1, 1, 4, -1];

/// `h^0` of the branch classes by direct enumeration of bidegree `(0, 10)`
/// on `z = 0`.
pub fn h0_branch_bruteforce(f: &FibrationType) -> i64 {
    grading::count_sections(&f.weights(), Multidegree::new(0, BRANCH_FIBRE_DEGREE), 0)
        .expect("validated type parameters are bounded")
}

/// `h^0` on `z = 0` at the bidegree of each of `t0, t1, x0, x1, y`.
pub fn aut_summands(f: &FibrationType) -> [(Variable, i64); 5] {
    let w = f.weights();
    [
        Variable::T0,
        Variable::T1,
        Variable::X0,
        Variable::X1,
        Variable::Y,
    ]
    .map(|var| {
        let n = grading::count_sections(&w, w.weight(var), 0)
            .expect("validated type parameters are bounded");
        (var, n)
    })
}

pub fn dim_aut_bruteforce(f: &FibrationType) -> i64 {
    aut_summands(f).iter().map(|&(_, n)| n).sum::<i64>() - 2
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub d: i64,
    /// `None` for checks about `Delta_d` as a whole.
    pub d0: Option<i64>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub d_min: i64,
    pub d_max: i64,
    pub checks_run: u64,
    /// Number of checks run, by check name.
    pub check_counts: BTreeMap<String, u64>,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    counts: BTreeMap<&'static str, u64>,
    failures: Vec<Failure>,
}

impl Tally {
    fn check<T: PartialEq + Display>(
        &mut self,
        d: i64,
        d0: Option<i64>,
        name: &'static str,
        expected: T,
        actual: T,
    ) {
        *self.counts.entry(name).or_default() += 1;
        if expected != actual {
            self.failures.push(Failure {
                d,
                d0,
                check: name.to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
    }
}

fn value_text(v: Option<Rational>) -> String {
    v.map_or_else(|| "outside the domain".to_string(), |r| r.to_string())
}

fn monomial_list(ms: &[XMonomial]) -> String {
    let names: Vec<String> = ms.iter().map(ToString::to_string).collect();
    format!("[{}]", names.join(", "))
}

/// Union of the rows of the vanishing-monomial table selected by `d0/d`,
/// in enumeration order.
pub fn vanishing_from_table(f: &FibrationType) -> Vec<XMonomial> {
    let mut ms: Vec<XMonomial> = VANISHING_TABLE
        .iter()
        .filter(|row| row.applies_to(f))
        .flat_map(|row| row.monomials())
        .collect();
    ms.sort_by_key(|m| (m.a3, m.a2, m.a1, m.a0));
    ms
}

fn check_type(t: &mut Tally, f: &FibrationType) {
    let (d, d0) = (f.d(), Some(f.d0()));
    t.check(
        d,
        d0,
        "h0_branch",
        moduli::h0_branch_closed(f),
        h0_branch_bruteforce(f),
    );
    t.check(
        d,
        d0,
        "dim_aut",
        moduli::dim_aut_closed(f),
        dim_aut_bruteforce(f),
    );
    t.check(
        d,
        d0,
        "delta_cases",
        moduli::delta_by_cases(f),
        moduli::h0_branch_closed(f) - moduli::dim_aut_closed(f) - 1,
    );
    t.check(
        d,
        d0,
        "vanishing_table",
        monomial_list(&vanishing_from_table(f)),
        monomial_list(&fibration::vanishing_monomials(f)),
    );
    let class = fibration::classify_singularities(f);
    t.check(
        d,
        d0,
        "singularity_interval",
        true,
        class.ratio_interval.contains(f.ratio()),
    );
}

fn check_degree(d: i64) -> Tally {
    let mut t = Tally::default();
    let range = moduli::stratum_range(d);
    let types: Vec<FibrationType> = range
        .clone()
        .map(|d0| fibration::validate(d, d0).expect("d0 in stratum range"))
        .collect();
    for f in &types {
        check_type(&mut t, f);
    }

    let deltas: Vec<(i64, i64)> = types.iter().map(|f| (f.d0(), moduli::delta(f))).collect();
    let decreasing = deltas
        .windows(2)
        .filter(|w| w[1].0 <= d)
        .all(|w| w[1].1 < w[0].1);
    let increasing = deltas
        .windows(2)
        .filter(|w| w[0].0 >= d)
        .all(|w| w[1].1 > w[0].1);
    t.check(d, None, "monotone_decreasing", true, decreasing);
    t.check(d, None, "monotone_increasing", true, increasing);

    let profile = moduli::delta_profile(d).expect("d >= 5");
    for &(d0, value) in &deltas {
        let seg = profile.evaluate(Rational::integer(d0));
        t.check(
            d,
            Some(d0),
            "profile_integer",
            value_text(Some(value.into())),
            value_text(seg),
        );
    }
    t.check(
        d,
        None,
        "breakpoint_count",
        BREAKPOINTS.len(),
        profile.discontinuities.len(),
    );
    for (gap, want) in profile.discontinuities.iter().zip(EXPECTED_GAPS) {
        t.check(d, None, "gap", Rational::integer(want), gap.gap);
    }
    let top = profile.evaluate(Rational::new(3 * d, 2));
    let inner = profile.evaluate(Rational::new(25 * d - 3, 26));
    let want = value_text(Some(Rational::integer(122 * d + 25)));
    t.check(d, None, "coincidence_top", want.clone(), value_text(top));
    t.check(d, None, "coincidence_inner", want, value_text(inner));

    let statuses: Vec<StratumStatus> = types
        .iter()
        .map(|f| moduli::stratum_status(f).expect("d >= 5"))
        .collect();
    let top_count = statuses
        .iter()
        .filter(|&&s| s == StratumStatus::TopStratum)
        .count();
    t.check(d, None, "status_top_unique", 1, top_count);
    let undetermined = statuses
        .iter()
        .filter(|&&s| s == StratumStatus::Undetermined)
        .count() as i64;
    t.check(
        d,
        None,
        "undetermined_count",
        (d + 2).div_euclid(26),
        undetermined,
    );
    let first_undetermined = types
        .iter()
        .zip(&statuses)
        .find(|(_, &s)| s == StratumStatus::Undetermined)
        .map(|(f, _)| f.d0());
    t.check(
        d,
        None,
        "undetermined_empty_iff_d_below_24",
        d < 24,
        first_undetermined.is_none(),
    );

    if d == 24 {
        for (d0, h0, aut, delta) in TABLE_D24 {
            let f = fibration::validate(d, d0).expect("table row is valid");
            t.check(
                d,
                Some(d0),
                "table_d24",
                format!("{h0},{aut},{delta}"),
                format!(
                    "{},{},{}",
                    h0_branch_bruteforce(&f),
                    dim_aut_bruteforce(&f),
                    moduli::delta(&f)
                ),
            );
        }
    }
    t
}

fn merge(d_min: i64, d_max: i64, tallies: Vec<Tally>) -> VerificationReport {
    let mut counts: BTreeMap<String, u64> = BTreeMap::new();
    let mut failures = Vec::new();
    for t in tallies {
        for (name, n) in t.counts {
            *counts.entry(name.to_string()).or_default() += n;
        }
        failures.extend(t.failures);
    }
    failures.sort();
    VerificationReport {
        d_min,
        d_max,
        checks_run: counts.values().sum(),
        check_counts: counts,
        failures,
    }
}

fn check_range(d_min: i64, d_max: i64) -> Result<()> {
    if d_min < 5 {
        return Err(Error::RangeInvalid {
            from: d_min,
            to: d_max,
            reason: "the lower end must be at least 5",
        });
    }
    if d_min > d_max {
        return Err(Error::RangeInvalid {
            from: d_min,
            to: d_max,
            reason: "the lower end exceeds the upper end",
        });
    }
    if d_max > fibration::MAX_TYPE_PARAMETER {
        return Err(Error::Overflow("type parameter above 10^12"));
    }
    Ok(())
}

/// Runs every check for each `d` in `[d_min, d_max]` and every valid `d0`.
///
/// The `d` values are spread over the rayon pool when the `parallel`
/// feature is on; the report is the same either way.
pub fn verify_range(d_min: i64, d_max: i64) -> Result<VerificationReport> {
    check_range(d_min, d_max)?;
    Ok(merge(
        d_min,
        d_max,
        sweep::map_range(d_min, d_max, check_degree),
    ))
}

pub fn verify_range_sequential(d_min: i64, d_max: i64) -> Result<VerificationReport> {
    check_range(d_min, d_max)?;
    Ok(merge(
        d_min,
        d_max,
        sweep::map_range_sequential(d_min, d_max, check_degree),
    ))
}

#[cfg(feature = "parallel")]
pub fn verify_range_parallel(d_min: i64, d_max: i64) -> Result<VerificationReport> {
    check_range(d_min, d_max)?;
    Ok(merge(
        d_min,
        d_max,
        sweep::map_range_parallel(d_min, d_max, check_degree),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fibration::validate;

    fn ft(d: i64, d0: i64) -> FibrationType {
        validate(d, d0).unwrap()
    }

    #[test]
    fn h0_bruteforce_examples() {
        assert_eq!(h0_branch_bruteforce(&ft(24, 36)), 3036);
        assert_eq!(h0_branch_bruteforce(&ft(24, 21)), 3121);
        assert_eq!(h0_branch_bruteforce(&ft(5, 7)), 661);
    }

    #[test]
    fn dim_aut_bruteforce_examples() {
        assert_eq!(dim_aut_bruteforce(&ft(24, 36)), 82);
        assert_eq!(dim_aut_bruteforce(&ft(24, 6)), 176);
    }

    #[test]
    fn aut_summands_when_e_is_zero() {
        for d in (2..=40).step_by(2) {
            let s = aut_summands(&ft(d, 3 * d / 2));
            assert_eq!(s[2], (Variable::X0, 2));
            assert_eq!(s[3], (Variable::X1, 2));
        }
    }

    #[test]
    fn aut_summands_term_by_term() {
        for d in 1..=50 {
            for d0 in moduli::stratum_range(d) {
                let s = aut_summands(&ft(d, d0));
                assert_eq!(s[0].1, 2);
                assert_eq!(s[1].1, 2);
                assert_eq!(s[2].1, 1 + (3 * d - 2 * d0 + 1));
                assert_eq!(s[3].1, (2 * d0 - 3 * d + 1).max(0) + 1);
                let x0_squared = (2 * (d0 - d) + 1).max(0);
                assert_eq!(s[4].1, x0_squared + (d + 1) + (2 * (2 * d - d0) + 1) + 1);
            }
        }
    }

    #[test]
    fn single_degree_covers_its_strata() {
        let r = verify_range(5, 5).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checks_run > 0);
        assert_eq!(r.check_counts["h0_branch"], 6);
    }

    #[test]
    fn degree_24_includes_table() {
        let r = verify_range(24, 24).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.check_counts["table_d24"], 12);
    }

    #[test]
    fn bad_ranges() {
        assert!(matches!(
            verify_range(60, 5),
            Err(Error::RangeInvalid { .. })
        ));
        assert!(matches!(
            verify_range(4, 10),
            Err(Error::RangeInvalid { .. })
        ));
    }

    #[test]
    fn sequential_and_default_agree() {
        assert_eq!(
            verify_range(5, 30).unwrap(),
            verify_range_sequential(5, 30).unwrap()
        );
    }
}
