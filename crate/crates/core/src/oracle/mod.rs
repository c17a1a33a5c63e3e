//! Exact answers for small graphs: exhaustive oriented diameter, canonical
//! codes, isomorphism-class enumeration, random bridgeless samples and the
//! size-threshold sweep built on them.

pub mod canon;
pub mod enumerate;
pub mod exhaustive;
pub mod random;
pub mod sweep;

pub use canon::{canonical_code, code_hex, CanonicalCode, CANON_CAP};
pub use enumerate::{
    enumerate_bridgeless, enumerate_bridgeless_range, enumerate_graphs, ENUMERATION_CAP,
    EXTENDED_ENUMERATION_CAP,
};
pub use exhaustive::{
    diameter_profile, oriented_diameter, oriented_diameter_with_cap, OrientedDiameter, DEFAULT_CAP,
    HARD_CAP, MAX_ORDER,
};
pub use random::random_bridgeless;
pub use sweep::{
    conjectured_threshold, sweep, ClassRecord, DiameterSummary, SizeRow, SweepOptions, SweepReport,
    Threshold, Verdict,
};

use crate::error::Result;
use crate::graph::{Distance, Orientation, UndirectedGraph};
use crate::orient::UpperCertificate;

/// Exhaustive evidence that a graph has no orientation of diameter at most
/// `threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerCertificate {
    /// Absent when the graph is beyond the canonical-code order cap.
    pub graph_code: Option<CanonicalCode>,
    pub threshold: usize,
    /// `2^(m-1)`: edge 0 is pinned since reversal preserves diameter.
    pub orientations_examined: u64,
    pub minimum_diameter: Distance,
    pub witness: Orientation,
}

impl LowerCertificate {
    /// The minimum over all orientations exceeds the threshold.
    pub fn is_valid(&self) -> bool {
        !self.minimum_diameter.within(self.threshold)
    }
}

/// Either kind of machine-checkable evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Upper(UpperCertificate),
    Lower(LowerCertificate),
}

pub fn verify_lower_bound(g: &UndirectedGraph, d: usize) -> Result<LowerCertificate> {
    verify_lower_bound_with_cap(g, d, DEFAULT_CAP)
}

pub fn verify_lower_bound_with_cap(
    g: &UndirectedGraph,
    d: usize,
    cap: usize,
) -> Result<LowerCertificate> {
    let od = oriented_diameter_with_cap(g, cap)?;
    let graph_code = (g.order() <= CANON_CAP)
        .then(|| canonical_code(g))
        .transpose()?;
    Ok(LowerCertificate {
        graph_code,
        threshold: d,
        orientations_examined: od.examined,
        minimum_diameter: od.diameter,
        witness: od.witness,
    })
}
