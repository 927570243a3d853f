use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::{delta, dim_aut_closed, h0_branch_closed};
use crate::error::{Error, Result};
use crate::fibration::{self, CanonicalImage, FibrationType, ModelStatus, SingularityClass};
use crate::rational::Rational;
use crate::sweep;

/// Smallest `p_g` for which the stratification is known to be complete.
pub const MIN_PG: i64 = 11;

/// Where a stratum `V_d(d0)` sits in the moduli space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StratumStatus {
    /// `d0 = floor(3d/2)`: dense in an irreducible component.
    TopStratum,
    /// `d <= d0 < floor(3d/2)`: in the closure of the top stratum.
    InClosureOfTop,
    /// `26 d0 <= 25 d - 3`: dense in an irreducible component.
    DenseInComponent,
    /// `(25d - 3)/26 < d0 < d`: open.
    Undetermined,
}

impl StratumStatus {
    pub fn name(self) -> &'static str {
        match self {
            StratumStatus::TopStratum => "top_stratum",
            StratumStatus::InClosureOfTop => "in_closure_of_top",
            StratumStatus::DenseInComponent => "dense_in_component",
            StratumStatus::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for StratumStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integers `d0` with `d/4 <= d0 <= 3d/2`.
pub fn stratum_range(d: i64) -> RangeInclusive<i64> {
    Rational::new(d, 4).ceil()..=(3 * d).div_euclid(2)
}

pub fn stratum_status(f: &FibrationType) -> Result<StratumStatus> {
    let (d, d0) = (f.d(), f.d0());
    if d < 5 {
        return Err(Error::DTooSmall(d));
    }
    Ok(if d0 == 3 * d / 2 {
        StratumStatus::TopStratum
    } else if d0 >= d {
        StratumStatus::InClosureOfTop
    } else if 26 * d0 <= 25 * d - 3 {
        StratumStatus::DenseInComponent
    } else {
        StratumStatus::Undetermined
    })
}

/// One row of the stratification table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumRecord {
    pub d: i64,
    pub d0: i64,
    pub h0_branch: i64,
    pub dim_aut: i64,
    pub delta: i64,
    pub singularity: SingularityClass,
    pub image: CanonicalImage,
    /// `None` when `d < 5`, where the status is not defined.
    #[serde(with = "status_field")]
    pub status: Option<StratumStatus>,
    pub model: ModelStatus,
    pub canonical_model: bool,
}

impl StratumRecord {
    pub fn status_label(&self) -> &'static str {
        self.status
            .map_or(status_field::NOT_APPLICABLE, StratumStatus::name)
    }
}

mod status_field {
    use serde::{Deserialize, Deserializer, Serializer};

    use super::StratumStatus;

    pub const NOT_APPLICABLE: &str = "n/a: d < 5";

    pub fn serialize<S: Serializer>(
        status: &Option<StratumStatus>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(status.map_or(NOT_APPLICABLE, StratumStatus::name))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<Option<StratumStatus>, D::Error> {
        let s = String::deserialize(deserializer)?;
        Ok(Some(match s.as_str() {
            NOT_APPLICABLE => return Ok(None),
            "top_stratum" => StratumStatus::TopStratum,
            "in_closure_of_top" => StratumStatus::InClosureOfTop,
            "dense_in_component" => StratumStatus::DenseInComponent,
            "undetermined" => StratumStatus::Undetermined,
            other => {
                return Err(serde::de::Error::custom(format!(
                    "unknown stratum status {other:?}"
                )))
            }
        }))
    }
}

pub fn stratum_record(f: &FibrationType) -> StratumRecord {
    let model = fibration::model_status(f);
    StratumRecord {
        d: f.d(),
        d0: f.d0(),
        h0_branch: h0_branch_closed(f),
        dim_aut: dim_aut_closed(f),
        delta: delta(f),
        singularity: fibration::classify_singularities(f),
        image: fibration::canonical_image(f),
        status: stratum_status(f).ok(),
        model,
        canonical_model: model.is_canonical_model(),
    }
}

fn check_pg(p_g: i64) -> Result<i64> {
    if p_g < MIN_PG {
        return Err(Error::PgTooSmall { p_g, min: MIN_PG });
    }
    if p_g.rem_euclid(3) != 1 {
        return Err(Error::EmptyModuli(p_g));
    }
    if p_g > 3 * fibration::MAX_TYPE_PARAMETER {
        return Err(Error::Overflow("p_g above 3*10^12"));
    }
    Ok((p_g + 2) / 3)
}

/// Upper and lower bounds on the number of irreducible components.
pub fn component_bounds(p_g: i64) -> Result<(i64, i64)> {
    check_pg(p_g)?;
    let upper = (p_g + 6).div_euclid(4);
    Ok((upper, upper - (p_g + 8).div_euclid(78)))
}

/// Dimension of the moduli space, i.e. of its largest stratum.
pub fn moduli_dimension(p_g: i64) -> Result<i64> {
    let d = check_pg(p_g)?;
    let value = Rational::new(169, 3)
        .scale(p_g)?
        .checked_sub(Rational::integer(56).scale(Rational::new(p_g + 2, 12).ceil())?)?
        .checked_add(Rational::new(386, 3))?;
    let dim = value
        .to_integer()
        .unwrap_or_else(|| panic!("moduli dimension {value} is not an integer for p_g = {p_g}"));
    debug_assert_eq!(
        dim,
        delta(&fibration::validate(d, Rational::new(d, 4).ceil()).expect("argmax is valid"))
    );
    Ok(dim)
}

/// The stratification of the moduli space with the given `p_g`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliSummary {
    pub p_g: i64,
    pub k3: Rational,
    /// `(p_g + 2) / 3`, present when the moduli space is nonempty.
    pub d: Option<i64>,
    pub nonempty: bool,
    /// Number of strata, one per integer `d0` in `[d/4, 3d/2]`.
    pub stratum_count: usize,
    pub strata: Vec<StratumRecord>,
    pub components_upper: Option<i64>,
    pub components_lower: Option<i64>,
    pub dimension: Option<i64>,
    pub argmax_d0: Option<i64>,
}

pub fn moduli_summary(p_g: i64) -> Result<ModuliSummary> {
    if p_g < MIN_PG {
        return Err(Error::PgTooSmall { p_g, min: MIN_PG });
    }
    let k3 = Rational::integer(4)
        .scale(p_g)?
        .checked_sub(Rational::integer(10))?
        .checked_div(Rational::integer(3))?;
    if p_g.rem_euclid(3) != 1 {
        return Ok(ModuliSummary {
            p_g,
            k3,
            d: None,
            nonempty: false,
            stratum_count: 0,
            strata: Vec::new(),
            components_upper: None,
            components_lower: None,
            dimension: None,
            argmax_d0: None,
        });
    }
    let d = check_pg(p_g)?;
    let range = stratum_range(d);
    let strata = sweep::map_range(*range.start(), *range.end(), |d0| {
        stratum_record(&fibration::validate(d, d0).expect("d0 in stratum range"))
    });
    let best = strata
        .iter()
        .max_by_key(|s| (s.delta, -s.d0))
        .expect("at least one stratum");
    let (upper, lower) = component_bounds(p_g)?;
    let dimension = moduli_dimension(p_g)?;
    debug_assert_eq!(best.delta, dimension);
    Ok(ModuliSummary {
        p_g,
        k3,
        d: Some(d),
        nonempty: true,
        stratum_count: strata.len(),
        argmax_d0: Some(best.d0),
        dimension: Some(dimension),
        components_upper: Some(upper),
        components_lower: Some(lower),
        strata,
    })
}
