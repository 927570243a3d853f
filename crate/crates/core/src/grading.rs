//! Bigraded monomial bookkeeping for the toric 4-fold F(d; d0).
//!
//! The coordinate ring has variables `t0, t1, x0, x1, y, z` graded by a 2x6
//! integer matrix. The first row depends on `(d, d0)`; the second row, the
//! fibre degree, is always `(0, 0, 1, 1, 2, 5)`. A section space of a given
//! bidegree splits as a direct sum over monomials in `x0, x1, y, z` of binary
//! forms in `t0, t1`, so counting sections reduces to summing
//! `max(0, deg + 1)` over the fibre-degree monomials.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{self, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variable {
    T0,
    T1,
    X0,
    X1,
    Y,
    Z,
}

impl Variable {
    pub const ALL: [Variable; 6] = [
        Variable::T0,
        Variable::T1,
        Variable::X0,
        Variable::X1,
        Variable::Y,
        Variable::Z,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Variable::T0 => "t0",
            Variable::T1 => "t1",
            Variable::X0 => "x0",
            Variable::X1 => "x1",
            Variable::Y => "y",
            Variable::Z => "z",
        }
    }
}

/// A bidegree `(w1, w2)`; `w2` is the fibre degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multidegree {
    pub w1: i64,
    pub w2: i64,
}

impl Multidegree {
    pub const fn new(w1: i64, w2: i64) -> Self {
        Multidegree { w1, w2 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Column {
    pub var: Variable,
    pub weight: Multidegree,
}

/// The weight matrix of F(d; d0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    d: i64,
    d0: i64,
    columns: [Column; 6],
}

impl WeightMatrix {
    pub fn new(d: i64, d0: i64) -> Result<Self> {
        let x0 = error::sub(d, d0, "weight of x0")?;
        let x1 = error::sub(d0, error::mul(2, d, "weight of x1")?, "weight of x1")?;
        let first_row = [1, 1, x0, x1, 0, 0];
        let second_row = [0, 0, 1, 1, 2, 5];
        let mut columns = [Column {
            var: Variable::T0,
            weight: Multidegree::new(0, 0),
        }; 6];
        for (i, var) in Variable::ALL.into_iter().enumerate() {
            columns[i] = Column {
                var,
                weight: Multidegree::new(first_row[i], second_row[i]),
            };
        }
        Ok(WeightMatrix { d, d0, columns })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn d0(&self) -> i64 {
        self.d0
    }

    pub fn columns(&self) -> &[Column; 6] {
        &self.columns
    }

    pub fn weight(&self, var: Variable) -> Multidegree {
        self.columns[var as usize].weight
    }

    /// First-row degree of `x0^a0 x1^a1 y^a2 z^a3`.
    pub fn first_row_weight(&self, m: &XMonomial) -> Result<i64> {
        let ctx = "first-row weight";
        let mut total = 0i64;
        for (var, exp) in [
            (Variable::X0, m.a0),
            (Variable::X1, m.a1),
            (Variable::Y, m.a2),
            (Variable::Z, m.a3),
        ] {
            let term = error::mul(self.weight(var).w1, i64::from(exp), ctx)?;
            total = error::add(total, term, ctx)?;
        }
        Ok(total)
    }
}

/// A monomial `x0^a0 x1^a1 y^a2 z^a3`.
///
/// Serializes as a product string such as `"x0^8*y"`; the constant monomial
/// is `"1"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XMonomial {
    pub a0: u32,
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
}

impl XMonomial {
    pub const fn new(a0: u32, a1: u32, a2: u32, a3: u32) -> Self {
        XMonomial { a0, a1, a2, a3 }
    }

    pub fn fibre_degree(&self) -> i64 {
        i64::from(self.a0) + i64::from(self.a1) + 2 * i64::from(self.a2) + 5 * i64::from(self.a3)
    }

    fn order_key(&self) -> (u32, u32, u32, u32) {
        (self.a3, self.a2, self.a1, self.a0)
    }
}

impl fmt::Display for XMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = [
            ("x0", self.a0),
            ("x1", self.a1),
            ("y", self.a2),
            ("z", self.a3),
        ]
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .map(|(v, e)| {
            if e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl FromStr for XMonomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "monomial",
            input: s.to_string(),
        };
        let mut m = XMonomial::new(0, 0, 0, 0);
        if s.trim() == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let (var, exp) = match factor.trim().split_once('^') {
                Some((v, e)) => (v, e.parse::<u32>().map_err(|_| bad())?),
                None => (factor.trim(), 1),
            };
            let slot = match var {
                "x0" => &mut m.a0,
                "x1" => &mut m.a1,
                "y" => &mut m.a2,
                "z" => &mut m.a3,
                _ => return Err(bad()),
            };
            *slot = slot.checked_add(exp).ok_or_else(bad)?;
        }
        Ok(m)
    }
}

impl Serialize for XMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for XMonomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One summand `S^coeff_degree(t0, t1) * monomial` of a section space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionTerm {
    pub monomial: XMonomial,
    pub coeff_degree: i64,
    pub contribution: i64,
}

impl SectionTerm {
    pub fn new(monomial: XMonomial, coeff_degree: i64) -> Self {
        SectionTerm {
            monomial,
            coeff_degree,
            contribution: if coeff_degree >= 0 {
                coeff_degree + 1
            } else {
                0
            },
        }
    }
}

/// Every monomial in `x0, x1, y, z` of fibre degree `w2`, ordered
/// lexicographically by `(a3, a2, a1, a0)`.
pub fn xmonomials_of_fibre_degree(w2: i64) -> Vec<XMonomial> {
    xmonomials_bounded(w2, u32::MAX)
}

/// As [`xmonomials_of_fibre_degree`], keeping only `a3 <= max_z_exponent`.
pub fn xmonomials_bounded(w2: i64, max_z_exponent: u32) -> Vec<XMonomial> {
    let Ok(w2) = u32::try_from(w2) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for a3 in 0..=(w2 / 5).min(max_z_exponent) {
        let r3 = w2 - 5 * a3;
        for a2 in 0..=r3 / 2 {
            let r2 = r3 - 2 * a2;
            for a1 in 0..=r2 {
                out.push(XMonomial::new(r2 - a1, a1, a2, a3));
            }
        }
    }
    debug_assert!(out.windows(2).all(|w| w[0].order_key() < w[1].order_key()));
    out
}

/// Decomposes the sections of bidegree `target` into binary-form summands.
pub fn section_terms(
    weights: &WeightMatrix,
    target: Multidegree,
    max_z_exponent: u32,
) -> Result<Vec<SectionTerm>> {
    xmonomials_bounded(target.w2, max_z_exponent)
        .into_iter()
        .map(|m| {
            let w = weights.first_row_weight(&m)?;
            let coeff = error::sub(target.w1, w, "coefficient degree")?;
            if coeff == i64::MAX {
                return Err(Error::Overflow("section contribution"));
            }
            Ok(SectionTerm::new(m, coeff))
        })
        .collect()
}

/// Dimension of the section space of bidegree `target`.
pub fn count_sections(
    weights: &WeightMatrix,
    target: Multidegree,
    max_z_exponent: u32,
) -> Result<i64> {
    section_terms(weights, target, max_z_exponent)?
        .iter()
        .try_fold(0i64, |acc, t| {
            error::add(acc, t.contribution, "section count")
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_matrix_columns() {
        let w = WeightMatrix::new(24, 23).unwrap();
        let cols: Vec<(i64, i64)> = w
            .columns()
            .iter()
            .map(|c| (c.weight.w1, c.weight.w2))
            .collect();
        assert_eq!(cols, vec![(1, 0), (1, 0), (1, 1), (-25, 1), (0, 2), (0, 5)]);
    }

    #[test]
    fn constant_monomial() {
        assert_eq!(
            xmonomials_of_fibre_degree(0),
            vec![XMonomial::new(0, 0, 0, 0)]
        );
    }

    #[test]
    fn negative_fibre_degree_is_empty() {
        assert!(xmonomials_of_fibre_degree(-3).is_empty());
        let w = WeightMatrix::new(5, 3).unwrap();
        assert_eq!(count_sections(&w, Multidegree::new(4, -1), 0).unwrap(), 0);
    }

    #[test]
    fn degree_two_z_free() {
        let got = xmonomials_bounded(2, 0);
        let want = vec![
            XMonomial::new(2, 0, 0, 0),
            XMonomial::new(1, 1, 0, 0),
            XMonomial::new(0, 2, 0, 0),
            XMonomial::new(0, 0, 1, 0),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn degree_ten_z_free_has_36() {
        assert_eq!(xmonomials_bounded(10, 0).len(), 36);
    }

    #[test]
    fn pencil_at_one_zero() {
        let w = WeightMatrix::new(11, 9).unwrap();
        let terms = section_terms(&w, Multidegree::new(1, 0), 0).unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!((terms[0].coeff_degree, terms[0].contribution), (1, 2));
    }

    #[test]
    fn quadrics_at_five_two() {
        let w = WeightMatrix::new(5, 2).unwrap();
        let terms = section_terms(&w, Multidegree::new(0, 2), 0).unwrap();
        let degs: Vec<i64> = terms.iter().map(|t| t.coeff_degree).collect();
        let contribs: Vec<i64> = terms.iter().map(|t| t.contribution).collect();
        assert_eq!(degs, vec![-6, 5, 16, 0]);
        assert_eq!(contribs, vec![0, 6, 17, 1]);
        assert_eq!(count_sections(&w, Multidegree::new(0, 2), 0).unwrap(), 24);
    }

    #[test]
    fn table_rows_at_degree_ten() {
        let count = |d, d0| {
            count_sections(
                &WeightMatrix::new(d, d0).unwrap(),
                Multidegree::new(0, 10),
                0,
            )
            .unwrap()
        };
        assert_eq!(count(24, 36), 3036);
        assert_eq!(count(24, 23), 3061);
        assert_eq!(count(24, 6), 3913);
    }

    #[test]
    fn constants_only_at_origin() {
        let w = WeightMatrix::new(24, 6).unwrap();
        assert_eq!(count_sections(&w, Multidegree::new(0, 0), 3).unwrap(), 1);
    }

    #[test]
    fn overflow_surfaces_as_error() {
        let w = WeightMatrix::new(i64::MAX / 4, 1).unwrap();
        assert!(matches!(
            count_sections(&w, Multidegree::new(0, 10), 0),
            Err(Error::Overflow(_))
        ));
        assert!(WeightMatrix::new(i64::MAX, 0).is_err());
    }

    #[test]
    fn monomial_text_round_trip() {
        for m in xmonomials_of_fibre_degree(11) {
            let s = m.to_string();
            assert_eq!(s.parse::<XMonomial>().unwrap(), m, "{s}");
        }
        assert_eq!(XMonomial::new(8, 0, 1, 0).to_string(), "x0^8*y");
        assert!("w^2".parse::<XMonomial>().is_err());
    }
}
