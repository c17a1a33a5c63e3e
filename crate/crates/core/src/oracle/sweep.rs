//! Empirical size thresholds: for each order, the least edge count forcing an
//! orientation of diameter at most `d`, read off an exact table of worst
//! oriented diameters per edge count.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::canon::{canonical_code, code_hex};
use super::enumerate::enumerate_bridgeless_range;
use super::exhaustive::{oriented_diameter_with_cap, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::graph::{Distance, Edge, Orientation, UndirectedGraph};

/// Least edge count `m` such that every bridgeless class with at least `m`
/// edges has oriented diameter at most `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "value")]
pub enum Threshold {
    /// No class exceeds `d`; every size works.
    Vacuous,
    Finite(usize),
    /// Even the complete graph exceeds `d`.
    Unbounded,
}

impl Threshold {
    pub fn value(self) -> Option<usize> {
        match self {
            Threshold::Finite(m) => Some(m),
            _ => None,
        }
    }
}

impl std::fmt::Display for Threshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Threshold::Vacuous => f.write_str("vacuous"),
            Threshold::Finite(m) => write!(f, "{m}"),
            Threshold::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// One isomorphism class with its exact oriented diameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub n: usize,
    /// Canonical code in hex.
    pub code: String,
    pub edges: Vec<Edge>,
    pub oriented_diameter: Distance,
    /// Arcs of an orientation attaining the oriented diameter.
    pub witness: Vec<Edge>,
}

impl ClassRecord {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn graph(&self) -> UndirectedGraph {
        UndirectedGraph::new(self.n, self.edges.iter().copied())
            .expect("record holds a valid graph")
    }

    pub fn witness_orientation(&self) -> Orientation {
        Orientation::from_arcs(self.graph(), self.witness.iter().copied())
            .expect("record holds a valid orientation")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub m: usize,
    pub classes: usize,
    pub max_diameter: Distance,
    /// Codes (hex) of the classes attaining `max_diameter`.
    pub extremal: Vec<String>,
}

/// Comparison of an empirical threshold with `C(n-d, 2) + n + 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum Verdict {
    /// The thresholds match; `extremal` has one edge fewer and exceeds `d`.
    Agrees {
        value: usize,
        extremal: Option<ClassRecord>,
    },
    /// A class at or above the conjectured size still exceeds `d`.
    UpperFails {
        conjectured: usize,
        empirical: Threshold,
        counterexample: ClassRecord,
    },
    /// Every class from some size below the conjectured one already meets
    /// `d`; `largest_violator` is the biggest class that does not, if any.
    LowerFails {
        conjectured: usize,
        empirical: Threshold,
        largest_violator: Option<ClassRecord>,
    },
}

impl Verdict {
    pub fn agrees(&self) -> bool {
        matches!(self, Verdict::Agrees { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterSummary {
    pub d: usize,
    pub threshold: Threshold,
    pub conjectured: Option<usize>,
    pub verdict: Option<Verdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub n: usize,
    pub rows: Vec<SizeRow>,
    pub thresholds: Vec<DiameterSummary>,
    pub classes: Vec<ClassRecord>,
}

impl SweepReport {
    pub fn threshold(&self, d: usize) -> Option<Threshold> {
        self.thresholds
            .iter()
            .find(|t| t.d == d)
            .map(|t| t.threshold)
    }

    pub fn verdict(&self, d: usize) -> Option<&Verdict> {
        self.thresholds
            .iter()
            .find(|t| t.d == d)
            .and_then(|t| t.verdict.as_ref())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepOptions {
    /// Admit order 7.
    pub extended: bool,
    pub cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            extended: false,
            cap: DEFAULT_CAP,
        }
    }
}

/// `C(n-d, 2) + n + 2`, defined for `2 <= d <= n - 2`.
pub fn conjectured_threshold(n: usize, d: usize) -> Option<usize> {
    (d >= 2 && d + 2 <= n).then(|| {
        let k = n - d;
        k * (k - 1) / 2 + n + 2
    })
}

pub fn sweep(n: usize, d_values: &[usize], opts: &SweepOptions) -> Result<SweepReport> {
    let graphs = enumerate_bridgeless_range(n, opts.extended)?;
    let classes: Vec<ClassRecord> = graphs
        .par_iter()
        .map(|g| {
            let od = oriented_diameter_with_cap(g, opts.cap)?;
            Ok(ClassRecord {
                n,
                code: code_hex(&canonical_code(g)?),
                edges: g.edges().to_vec(),
                oriented_diameter: od.diameter,
                witness: od.witness.arcs().collect(),
            })
        })
        .collect::<Result<_>>()?;
    if classes.iter().any(|c| !c.oriented_diameter.is_finite()) {
        return Err(Error::Internal(
            "a bridgeless class has no strong orientation".into(),
        ));
    }

    let mut rows: Vec<SizeRow> = Vec::new();
    for c in &classes {
        match rows.last_mut() {
            Some(row) if row.m == c.size() => {
                row.classes += 1;
                if c.oriented_diameter > row.max_diameter {
                    row.max_diameter = c.oriented_diameter;
                    row.extremal.clear();
                }
                if c.oriented_diameter == row.max_diameter {
                    row.extremal.push(c.code.clone());
                }
            }
            _ => rows.push(SizeRow {
                m: c.size(),
                classes: 1,
                max_diameter: c.oriented_diameter,
                extremal: vec![c.code.clone()],
            }),
        }
    }

    let complete = n * n.saturating_sub(1) / 2;
    let thresholds = d_values
        .iter()
        .map(|&d| {
            // classes are sorted by size, so the last violator is a largest one
            let violator = classes
                .iter()
                .rev()
                .find(|c| !c.oriented_diameter.within(d));
            let threshold = match violator {
                None => Threshold::Vacuous,
                Some(c) if c.size() == complete => Threshold::Unbounded,
                Some(c) => Threshold::Finite(c.size() + 1),
            };
            let conjectured = conjectured_threshold(n, d);
            let verdict = conjectured.map(|value| judge(&classes, d, value, threshold, violator));
            DiameterSummary {
                d,
                threshold,
                conjectured,
                verdict,
            }
        })
        .collect();

    Ok(SweepReport {
        n,
        rows,
        thresholds,
        classes,
    })
}

fn judge(
    classes: &[ClassRecord],
    d: usize,
    conjectured: usize,
    empirical: Threshold,
    violator: Option<&ClassRecord>,
) -> Verdict {
    let smallest = classes.first().map_or(0, ClassRecord::size);
    let effective = match empirical {
        Threshold::Finite(m) => m,
        Threshold::Vacuous => smallest,
        Threshold::Unbounded => usize::MAX,
    };
    if effective > conjectured {
        let counterexample = violator
            .expect("a finite or unbounded threshold has a violator")
            .clone();
        return Verdict::UpperFails {
            conjectured,
            empirical,
            counterexample,
        };
    }
    if effective < conjectured && conjectured > smallest {
        return Verdict::LowerFails {
            conjectured,
            empirical,
            largest_violator: violator.cloned(),
        };
    }
    let extremal = classes
        .iter()
        .find(|c| c.size() + 1 == conjectured && !c.oriented_diameter.within(d))
        .cloned();
    Verdict::Agrees {
        value: conjectured,
        extremal,
    }
}
