//! Report documents and their JSON, CSV and text-table renderings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fibration;
use crate::grading::XMonomial;
use crate::moduli::{self, DeltaProfile, ModuliSummary, StratumRecord};
use crate::oracle::{self, VerificationReport};
use crate::rational::Rational;
use crate::sweep;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::Parse {
                what: "output format (json, csv or table)",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Json => "json",
            OutputFormat::Csv => "csv",
            OutputFormat::Table => "table",
        })
    }
}

/// A single stratum with the threefold's invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub p_g: i64,
    pub k3: i64,
    pub e: i64,
    pub record: StratumRecord,
    pub vanishing_monomials: Vec<XMonomial>,
}

/// `Delta_d` as a piecewise function plus its values at every integer `d0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub profile: DeltaProfile,
    pub rows: Vec<StratumRecord>,
}

/// Top-level output document; JSON carries the variant in `kind`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Stratum(StratumReport),
    Moduli(ModuliSummary),
    Profile(ProfileReport),
    Verification(VerificationReport),
}

pub fn stratum_document(d: i64, d0: i64) -> Result<Document> {
    let f = fibration::validate(d, d0)?;
    let inv = fibration::invariants(&f);
    Ok(Document::Stratum(StratumReport {
        p_g: inv.p_g,
        k3: inv.k3,
        e: f.e(),
        record: moduli::stratum_record(&f),
        vanishing_monomials: fibration::vanishing_monomials(&f),
    }))
}

pub fn moduli_document(p_g: i64) -> Result<Document> {
    moduli::moduli_summary(p_g).map(Document::Moduli)
}

pub fn profile_document(d: i64) -> Result<Document> {
    let profile = moduli::delta_profile(d)?;
    let range = moduli::stratum_range(d);
    let rows = sweep::map_range(*range.start(), *range.end(), |d0| {
        moduli::stratum_record(&fibration::validate(d, d0).expect("d0 in stratum range"))
    });
    Ok(Document::Profile(ProfileReport { profile, rows }))
}

pub fn verification_document(d_min: i64, d_max: i64) -> Result<Document> {
    oracle::verify_range(d_min, d_max).map(Document::Verification)
}

pub fn render(doc: &Document, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
            s.push('\n');
            s
        }
        OutputFormat::Csv => render_csv(doc),
        OutputFormat::Table => render_table(doc),
    }
}

/// Column order shared by every per-stratum CSV.
pub const STRATUM_COLUMNS: [&str; 6] = [
    "d0",
    "h0_branch",
    "dim_aut",
    "delta",
    "singularity",
    "status",
];

fn stratum_cells(r: &StratumRecord) -> Vec<String> {
    vec![
        r.d0.to_string(),
        r.h0_branch.to_string(),
        r.dim_aut.to_string(),
        r.delta.to_string(),
        r.singularity.name().to_string(),
        r.status_label().to_string(),
    ]
}

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("write to memory");
    for row in rows {
        w.write_record(&row).expect("write to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 cells")
}

fn join_monomials(ms: &[XMonomial]) -> String {
    ms.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn render_csv(doc: &Document) -> String {
    match doc {
        Document::Stratum(s) => {
            let mut header = STRATUM_COLUMNS.to_vec();
            header.extend([
                "d",
                "p_g",
                "k3",
                "e",
                "canonical_image",
                "model",
                "vanishing_monomials",
            ]);
            let mut row = stratum_cells(&s.record);
            row.extend([
                s.record.d.to_string(),
                s.p_g.to_string(),
                s.k3.to_string(),
                s.e.to_string(),
                s.record.image.to_string(),
                s.record.model.name().to_string(),
                join_monomials(&s.vanishing_monomials),
            ]);
            csv_string(&header, [row])
        }
        Document::Moduli(m) => csv_string(&STRATUM_COLUMNS, m.strata.iter().map(stratum_cells)),
        Document::Profile(p) => csv_string(&STRATUM_COLUMNS, p.rows.iter().map(stratum_cells)),
        Document::Verification(v) => csv_string(
            &["d", "d0", "check", "expected", "actual"],
            v.failures.iter().map(|f| {
                vec![
                    f.d.to_string(),
                    f.d0.map_or_else(String::new, |d0| d0.to_string()),
                    f.check.clone(),
                    f.expected.clone(),
                    f.actual.clone(),
                ]
            }),
        ),
    }
}

/// Left-aligned text columns, numbers right-aligned.
fn text_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let ncol = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in width.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let numeric: Vec<bool> = (0..ncol)
        .map(|c| !rows.is_empty() && rows.iter().all(|r| r[c].parse::<i64>().is_ok()))
        .collect();
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(c, s)| {
                if numeric[c] {
                    format!("{s:>w$}", w = width[c])
                } else {
                    format!("{s:<w$}", w = width[c])
                }
            })
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    let rule: Vec<String> = width.iter().map(|&w| "-".repeat(w)).collect();
    out.push_str(&(rule.join("  ") + "\n"));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let w = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<w$}  {v}\n"))
        .collect()
}

fn opt(v: Option<i64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn affine_text(slope: i64, d_coeff: i64, constant: i64) -> String {
    let mut s = String::new();
    if slope != 0 {
        s.push_str(&format!("{slope}*d0 + "));
    }
    s.push_str(&format!("{d_coeff}*d + {constant}"));
    s.replace("+ -", "- ")
}

fn render_table(doc: &Document) -> String {
    match doc {
        Document::Stratum(s) => {
            let r = &s.record;
            key_values(&[
                ("type (d, d0)", format!("({}, {})", r.d, r.d0)),
                ("p_g", s.p_g.to_string()),
                ("K^3", s.k3.to_string()),
                ("e", s.e.to_string()),
                ("canonical image", r.image.to_string()),
                ("model", r.model.name().to_string()),
                ("singularities", r.singularity.to_string()),
                (
                    "d0/d interval",
                    format!("{:#}", r.singularity.ratio_interval),
                ),
                (
                    "vanishing monomials",
                    join_monomials(&s.vanishing_monomials),
                ),
                ("h0 branch", r.h0_branch.to_string()),
                ("dim Aut", r.dim_aut.to_string()),
                ("delta", r.delta.to_string()),
                ("status", r.status_label().to_string()),
            ])
        }
        Document::Moduli(m) => {
            let mut out = key_values(&[
                ("p_g", m.p_g.to_string()),
                ("K^3", format!("{:#}", m.k3)),
                ("nonempty", m.nonempty.to_string()),
                ("d", opt(m.d)),
                ("strata", m.stratum_count.to_string()),
                ("components (upper)", opt(m.components_upper)),
                ("components (lower)", opt(m.components_lower)),
                ("dimension", opt(m.dimension)),
                ("argmax d0", opt(m.argmax_d0)),
            ]);
            if !m.strata.is_empty() {
                out.push('\n');
                let rows: Vec<Vec<String>> = m.strata.iter().map(stratum_cells).collect();
                out.push_str(&text_table(&STRATUM_COLUMNS, &rows));
            }
            out
        }
        Document::Profile(p) => {
            let d = p.profile.d;
            let mut out = format!(
                "Delta_{d} on [{:#}, {:#}]\n\n",
                Rational::new(d, 4),
                Rational::new(3 * d, 2)
            );
            let segs: Vec<Vec<String>> = p
                .profile
                .segments
                .iter()
                .map(|s| {
                    vec![
                        format!("{:#}", s.d0_interval),
                        affine_text(s.slope, s.intercept_d, s.intercept_const),
                    ]
                })
                .collect();
            out.push_str(&text_table(&["d0 interval", "Delta"], &segs));
            out.push('\n');
            let gaps: Vec<Vec<String>> = p
                .profile
                .discontinuities
                .iter()
                .map(|g| {
                    vec![
                        format!("{:#}", g.lambda),
                        format!("{:#}", g.d0),
                        format!("{:#}", g.gap),
                    ]
                })
                .collect();
            out.push_str(&text_table(&["lambda", "d0", "gap"], &gaps));
            out.push('\n');
            let rows: Vec<Vec<String>> = p.rows.iter().map(stratum_cells).collect();
            out.push_str(&text_table(&STRATUM_COLUMNS, &rows));
            out
        }
        Document::Verification(v) => {
            let mut out = format!(
                "verified d in [{}, {}]: {} checks, {} failures\n\n",
                v.d_min,
                v.d_max,
                v.checks_run,
                v.failures.len()
            );
            let counts: Vec<Vec<String>> = v
                .check_counts
                .iter()
                .map(|(k, n)| vec![k.clone(), n.to_string()])
                .collect();
            out.push_str(&text_table(&["check", "runs"], &counts));
            if !v.failures.is_empty() {
                out.push('\n');
                let rows: Vec<Vec<String>> = v
                    .failures
                    .iter()
                    .map(|f| {
                        vec![
                            f.d.to_string(),
                            f.d0.map_or_else(|| "-".to_string(), |d0| d0.to_string()),
                            f.check.clone(),
                            f.expected.clone(),
                            f.actual.clone(),
                        ]
                    })
                    .collect();
                out.push_str(&text_table(
                    &["d", "d0", "check", "expected", "actual"],
                    &rows,
                ));
            }
            out
        }
    }
}
