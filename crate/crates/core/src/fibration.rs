//! Numerical model of a Gorenstein regular simple fibration in
//! (1,2)-surfaces of type (d, d0).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grading::{self, Multidegree, SectionTerm, WeightMatrix, XMonomial};
use crate::rational::{Interval, Rational};

/// Largest accepted `d` or `d0`. Keeps every derived count far inside `i64`.
pub const MAX_TYPE_PARAMETER: i64 = 1_000_000_000_000;

/// Fibre degree of the branch divisor (and of `z^2`).
pub const BRANCH_FIBRE_DEGREE: i64 = 10;

/// A validated type `(d, d0)`, with `e = 3d - 2d0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FibrationType {
    d: i64,
    d0: i64,
    e: i64,
}

impl FibrationType {
    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// The exact ratio `d0 / d`.
    pub fn ratio(&self) -> Rational {
        Rational::new(self.d0, self.d)
    }

    pub fn weights(&self) -> WeightMatrix {
        WeightMatrix::new(self.d, self.d0).expect("validated type parameters are bounded")
    }
}

impl fmt::Display for FibrationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.d, self.d0)
    }
}

/// Checks `1 <= d`, `1 <= d0`, `d <= 4 d0` and `2 d0 <= 3 d`.
pub fn validate(d: i64, d0: i64) -> Result<FibrationType> {
    let out = |violated| Error::OutOfRange { d, d0, violated };
    if d < 1 {
        return Err(out("d >= 1"));
    }
    if d0 < 1 {
        return Err(out("d0 >= 1"));
    }
    if d > MAX_TYPE_PARAMETER || d0 > MAX_TYPE_PARAMETER {
        return Err(Error::Overflow("type parameter above 10^12"));
    }
    if d > 4 * d0 {
        return Err(out("d <= 4*d0"));
    }
    if 2 * d0 > 3 * d {
        return Err(out("2*d0 <= 3*d"));
    }
    Ok(FibrationType {
        d,
        d0,
        e: 3 * d - 2 * d0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumericalInvariants {
    pub p_g: i64,
    pub q: i64,
    pub k3: i64,
}

pub fn invariants(f: &FibrationType) -> NumericalInvariants {
    let inv = NumericalInvariants {
        p_g: 3 * f.d - 2,
        q: 0,
        k3: 4 * f.d - 6,
    };
    debug_assert_eq!(3 * inv.k3, 4 * inv.p_g - 10);
    inv
}

/// Degree of the binary form multiplying `x0^a0 x1^a1 y^a2` in the
/// degree-10 equation. The `y` exponent plays no role.
pub fn coefficient_degree(a0: u32, a1: u32, f: &FibrationType) -> i64 {
    let (a0, a1) = (i64::from(a0), i64::from(a1));
    let deg = a0 * (f.d0 - f.d) + a1 * (2 * f.d - f.d0);
    let twice = (a0 + a1) * f.d + (a1 - a0) * f.e;
    assert!(twice % 2 == 0, "parity of (a0+a1)d + (a1-a0)e");
    assert_eq!(deg, twice / 2, "coefficient degree identity");
    deg
}

/// The z-free monomials of fibre degree 10 whose coefficient has negative
/// degree, in enumeration order.
pub fn vanishing_monomials(f: &FibrationType) -> Vec<XMonomial> {
    grading::xmonomials_bounded(BRANCH_FIBRE_DEGREE, 0)
        .into_iter()
        .filter(|m| coefficient_degree(m.a0, m.a1, f) < 0)
        .collect()
}

/// One row of the table of vanishing monomials: when `d0/d < below`, the
/// listed monomials drop out of the branch divisor.
#[derive(Debug, Clone, Copy)]
pub struct VanishingRow {
    pub below: (i64, i64),
    pub monomials: &'static [(u32, u32, u32)],
    pub stratum: &'static str,
}

impl VanishingRow {
    pub fn threshold(&self) -> Rational {
        Rational::new(self.below.0, self.below.1)
    }

    pub fn applies_to(&self, f: &FibrationType) -> bool {
        f.ratio() < self.threshold()
    }

    pub fn monomials(&self) -> impl Iterator<Item = XMonomial> + '_ {
        self.monomials
            .iter()
            .map(|&(a0, a1, a2)| XMonomial::new(a0, a1, a2, 0))
    }
}

/// Exponents are `(a0, a1, a2)` of `x0, x1, y`.
pub const VANISHING_TABLE: [VanishingRow; 6] = [
    VanishingRow {
        below: (1, 1),
        monomials: &[(10, 0, 0), (8, 0, 1), (6, 0, 2), (4, 0, 3), (2, 0, 4)],
        stratum: "terminal",
    },
    VanishingRow {
        below: (7, 8),
        monomials: &[(9, 1, 0)],
        stratum: "cA1",
    },
    VanishingRow {
        below: (5, 6),
        monomials: &[(7, 1, 1)],
        stratum: "cA3",
    },
    VanishingRow {
        below: (3, 4),
        monomials: &[(5, 1, 2)],
        stratum: "cA4",
    },
    VanishingRow {
        below: (2, 3),
        monomials: &[(8, 2, 0)],
        stratum: "cD6",
    },
    VanishingRow {
        below: (1, 2),
        monomials: &[(6, 2, 1), (3, 1, 3)],
        stratum: "cE8",
    },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CanonicalKind {
    #[serde(rename = "cA1")]
    CA1,
    #[serde(rename = "cA3")]
    CA3,
    #[serde(rename = "cA4")]
    CA4,
    #[serde(rename = "cD6")]
    CD6,
    #[serde(rename = "cE8")]
    CE8,
}

impl CanonicalKind {
    pub fn name(self) -> &'static str {
        match self {
            CanonicalKind::CA1 => "cA1",
            CanonicalKind::CA3 => "cA3",
            CanonicalKind::CA4 => "cA4",
            CanonicalKind::CD6 => "cD6",
            CanonicalKind::CE8 => "cE8",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum Singularities {
    Smooth,
    /// `count` terminal singularities, counted with multiplicity.
    Terminal {
        count: i64,
    },
    Canonical {
        kind: CanonicalKind,
    },
}

/// Singularities of the general member, together with the ratio interval
/// of `d0/d` that selected them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityClass {
    pub singularities: Singularities,
    pub ratio_interval: Interval,
}

impl SingularityClass {
    pub fn name(&self) -> &'static str {
        match self.singularities {
            Singularities::Smooth => "smooth",
            Singularities::Terminal { .. } => "terminal",
            Singularities::Canonical { kind } => kind.name(),
        }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.singularities {
            Singularities::Terminal { count } => write!(f, "terminal({count})"),
            _ => f.write_str(self.name()),
        }
    }
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

/// The ratio intervals that partition `[1/4, 3/2]`, each paired with the
/// canonical singularity it produces (`None` for the smooth range
/// `[1, 3/2]`, the terminal range is handled separately).
fn canonical_ranges() -> [(Interval, Option<CanonicalKind>); 6] {
    [
        (Interval::closed(r(1, 1), r(3, 2)), None),
        (
            Interval::half_open(r(5, 6), r(7, 8)),
            Some(CanonicalKind::CA1),
        ),
        (
            Interval::half_open(r(3, 4), r(5, 6)),
            Some(CanonicalKind::CA3),
        ),
        (
            Interval::half_open(r(2, 3), r(3, 4)),
            Some(CanonicalKind::CA4),
        ),
        (
            Interval::half_open(r(1, 2), r(2, 3)),
            Some(CanonicalKind::CD6),
        ),
        (
            Interval::half_open(r(1, 4), r(1, 2)),
            Some(CanonicalKind::CE8),
        ),
    ]
}

pub fn classify_singularities(f: &FibrationType) -> SingularityClass {
    let ratio = f.ratio();
    let seven_eighths = r(7, 8);
    if ratio == seven_eighths {
        return SingularityClass {
            singularities: Singularities::Smooth,
            ratio_interval: Interval::point(seven_eighths),
        };
    }
    let terminal = Interval::open(seven_eighths, Rational::ONE);
    if terminal.contains(ratio) {
        let count = 8 * f.d0 - 7 * f.d;
        debug_assert!(count > 0);
        return SingularityClass {
            singularities: Singularities::Terminal { count },
            ratio_interval: terminal,
        };
    }
    let (interval, kind) = canonical_ranges()
        .into_iter()
        .find(|(i, _)| i.contains(ratio))
        .expect("ratio intervals cover [1/4, 3/2]");
    SingularityClass {
        singularities: match kind {
            None => Singularities::Smooth,
            Some(kind) => Singularities::Canonical { kind },
        },
        ratio_interval: interval,
    }
}

/// Summands of the sections of bidegree `(0, 10)` on the divisor `z = 0`.
pub fn branch_basis(f: &FibrationType) -> Vec<SectionTerm> {
    grading::section_terms(&f.weights(), Multidegree::new(0, BRANCH_FIBRE_DEGREE), 0)
        .expect("validated type parameters are bounded")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CanonicalImage {
    RationalNormalCurve { degree: i64 },
    ConeOverRationalNormalCurve { degree: i64 },
    HirzebruchSurface { e: i64 },
}

impl fmt::Display for CanonicalImage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalImage::RationalNormalCurve { degree } => {
                write!(f, "rational normal curve of degree {degree}")
            }
            CanonicalImage::ConeOverRationalNormalCurve { degree } => {
                write!(f, "cone over rational normal curve of degree {degree}")
            }
            CanonicalImage::HirzebruchSurface { e } => write!(f, "Hirzebruch surface F_{e}"),
        }
    }
}

pub fn canonical_image(f: &FibrationType) -> CanonicalImage {
    match f.d0 {
        1 => CanonicalImage::RationalNormalCurve {
            degree: 3 * f.d - 3,
        },
        2 => CanonicalImage::ConeOverRationalNormalCurve {
            degree: 3 * f.d - 4,
        },
        _ => CanonicalImage::HirzebruchSurface { e: f.e },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelStatus {
    /// Ample canonical class: the threefold is its own canonical model.
    CanonicalModel,
    MinimalNotCanonical,
    NotOnNoetherLineOrNotGeneralType,
}

impl ModelStatus {
    /// Whether the canonical model is isomorphic to the fibration itself.
    pub fn is_canonical_model(self) -> bool {
        self == ModelStatus::CanonicalModel
    }

    pub fn name(self) -> &'static str {
        match self {
            ModelStatus::CanonicalModel => "canonical_model",
            ModelStatus::MinimalNotCanonical => "minimal_not_canonical",
            ModelStatus::NotOnNoetherLineOrNotGeneralType => {
                "not_on_noether_line_or_not_general_type"
            }
        }
    }
}

pub fn model_status(f: &FibrationType) -> ModelStatus {
    match f.d.min(f.d0) {
        1 => ModelStatus::NotOnNoetherLineOrNotGeneralType,
        2 => ModelStatus::MinimalNotCanonical,
        _ => ModelStatus::CanonicalModel,
    }
}

/// Position of `(p_g, K^3)` relative to the Noether line
/// `K^3 = (4 p_g - 10) / 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum NoetherClass {
    OnLine,
    AboveLine { gap: Rational },
    Forbidden,
}

pub fn noether_classification(p_g: i64, k3: Rational) -> Result<NoetherClass> {
    if p_g < 7 {
        return Err(Error::PgTooSmall { p_g, min: 7 });
    }
    let line = Rational::integer(4)
        .scale(p_g)?
        .checked_sub(Rational::integer(10))?
        .checked_div(Rational::integer(3))?;
    let gap = k3.checked_sub(line)?;
    let min_gap = match p_g.rem_euclid(3) {
        1 => {
            if gap == Rational::ZERO {
                return Ok(NoetherClass::OnLine);
            }
            r(1, 2)
        }
        2 => r(1, 6),
        _ => r(1, 3),
    };
    Ok(if gap >= min_gap {
        NoetherClass::AboveLine { gap }
    } else {
        NoetherClass::Forbidden
    })
}
