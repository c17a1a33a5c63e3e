//! Orientations of diameter at most `n - 2` for bridgeless graphs with at
//! least `n + 3` edges.
//!
//! [`orient_bounded`] starts from a DFS strong orientation and, when some
//! pair sits at distance `n - 1`, repairs it using the long-path layouts in
//! [`long_path`]. A spanning path that closes into a cycle hands over to the
//! chord patterns in [`cycle`]. Exhaustive search is the last resort on
//! small inputs.

pub mod cycle;
pub mod long_path;

use serde::{Deserialize, Serialize};

pub use cycle::{
    chords_cross, classify_chords, orient_via_cycle, selected_cycles, ChordPattern,
    HamiltonianFrame,
};
pub use long_path::{
    apply_case, build_long_path_frame, build_long_path_frame_for, find_return_path, long_pairs,
    mandated_suborientation, return_paths, CaseOrientation, CaseTag, FrameOutcome, LongPathFrame,
    ReturnPath,
};

use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distances, diameter, find_hamiltonian_cycle, strong_orientation, Distance,
    HamiltonianSearch, Orientation, UndirectedGraph,
};
use crate::oracle::oriented_diameter_with_cap;

/// Checks every ordered pair with a fresh all-pairs BFS.
pub fn verify_bound(o: &Orientation, bound: usize) -> Result<()> {
    for (from, row) in all_pairs_distances(o).iter().enumerate() {
        for (to, &d) in row.iter().enumerate() {
            if !d.within(bound) {
                return Err(Error::Verification {
                    from,
                    to,
                    distance: d.to_string(),
                    bound,
                });
            }
        }
    }
    Ok(())
}

/// How an orientation was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "case")]
pub enum Method {
    /// The DFS strong orientation already met the bound.
    StrongOrientation,
    /// Chord pattern on a Hamiltonian cycle.
    HamiltonianCycle,
    /// Repair of a long spanning path.
    LongPath(CaseTag),
    /// Exhaustive search over all orientations.
    Exhaustive,
}

impl Method {
    pub fn name(self) -> String {
        match self {
            Method::StrongOrientation => "strong-orientation".into(),
            Method::HamiltonianCycle => "hamiltonian-cycle".into(),
            Method::LongPath(tag) => format!("long-path/{}", tag.name()),
            Method::Exhaustive => "exhaustive".into(),
        }
    }
}

/// An orientation together with its BFS-checked diameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UpperCertificate {
    pub orientation: Orientation,
    pub diameter: Distance,
    pub method: Method,
    /// Layouts tried, including the one that succeeded.
    pub attempts: usize,
}

impl UpperCertificate {
    /// Recomputes the diameter and compares it with the recorded one.
    pub fn is_consistent(&self) -> bool {
        diameter(&self.orientation) == self.diameter
    }
}

/// Retry limits for [`orient_bounded_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientOptions {
    /// Return paths tried per long pair.
    pub max_return_paths: usize,
    /// Long pairs tried per orientation.
    pub max_pairs: usize,
    /// Largest order for the exhaustive fallback.
    pub fallback_order: usize,
    /// Largest size for the exhaustive fallback.
    pub exhaustive_cap: usize,
    /// Node budget for the Hamiltonian cycle search used as a second resort.
    pub hamiltonian_budget: u64,
    pub oracle_fallback: bool,
}

impl Default for OrientOptions {
    fn default() -> Self {
        Self {
            max_return_paths: 16,
            max_pairs: 8,
            fallback_order: 9,
            exhaustive_cap: 24,
            hamiltonian_budget: 1_000_000,
            oracle_fallback: true,
        }
    }
}

fn check_preconditions(g: &UndirectedGraph) -> Result<()> {
    let (n, m) = (g.order(), g.size());
    if n < 5 {
        return Err(Error::Precondition(format!(
            "order must be at least 5, got {n}"
        )));
    }
    if m < n + 3 {
        return Err(Error::Precondition(format!(
            "size must be at least n+3 = {}, got {m}",
            n + 3
        )));
    }
    Ok(())
}

fn certificate(orientation: Orientation, method: Method, attempts: usize) -> UpperCertificate {
    let diameter = diameter(&orientation);
    UpperCertificate {
        orientation,
        diameter,
        method,
        attempts,
    }
}

fn recoverable(e: &Error) -> bool {
    matches!(e, Error::Verification { .. } | Error::Conflict { .. })
}

pub fn orient_bounded(g: &UndirectedGraph) -> Result<UpperCertificate> {
    orient_bounded_with(g, &OrientOptions::default())
}

pub fn orient_bounded_with(g: &UndirectedGraph, opts: &OrientOptions) -> Result<UpperCertificate> {
    check_preconditions(g)?;
    let n = g.order();
    let strong = strong_orientation(g)?;
    if verify_bound(&strong, n - 2).is_ok() {
        return Ok(certificate(strong, Method::StrongOrientation, 1));
    }

    let mut attempts = 1;
    let mut last_error = None;
    for (x1, x2) in long_pairs(&strong).into_iter().take(opts.max_pairs) {
        let outcome = build_long_path_frame_for(&strong, x1, x2)?;
        let result = match outcome {
            FrameOutcome::WithinBound => unreachable!("pair was selected at distance n-1"),
            FrameOutcome::HamiltonianDetected(path) => {
                attempts += 1;
                HamiltonianFrame::new(g, path)
                    .and_then(|frame| orient_via_cycle(g, &frame))
                    .map(|o| (o, Method::HamiltonianCycle))
            }
            FrameOutcome::Frame(frame) if frame.spans_overlap() => {
                attempts += 1;
                apply_case(&frame, None).map(|c| (c.orientation, Method::LongPath(c.case)))
            }
            FrameOutcome::Frame(frame) => {
                let mut found = Err(Error::Internal("no return path tried".into()));
                for r in return_paths(&frame, opts.max_return_paths)? {
                    attempts += 1;
                    found = apply_case(&frame, Some(&r))
                        .map(|c| (c.orientation, Method::LongPath(c.case)));
                    match &found {
                        Ok(_) => break,
                        Err(e) if recoverable(e) => continue,
                        Err(_) => break,
                    }
                }
                found
            }
        };
        match result {
            Ok((o, method)) => return Ok(certificate(o, method, attempts)),
            Err(e) if recoverable(&e) => last_error = Some(e),
            Err(e) => return Err(e),
        }
    }

    if let Some(cert) = orient_hamiltonian(g, opts.hamiltonian_budget)? {
        return Ok(UpperCertificate {
            attempts: attempts + 1,
            ..cert
        });
    }
    attempts += 1;

    if opts.oracle_fallback && n <= opts.fallback_order && g.size() <= opts.exhaustive_cap {
        let od = oriented_diameter_with_cap(g, opts.exhaustive_cap)?;
        attempts += 1;
        if od.diameter.within(n - 2) {
            return Ok(certificate(od.witness, Method::Exhaustive, attempts));
        }
        return Err(Error::Exhaustion(format!(
            "no orientation of diameter at most {} exists; minimum is {}",
            n - 2,
            od.diameter
        )));
    }
    Err(Error::Exhaustion(format!(
        "{attempts} attempts failed{}",
        last_error
            .map(|e| format!("; last: {e}"))
            .unwrap_or_default()
    )))
}

/// Orients via a Hamiltonian cycle found by budgeted search. `Ok(None)` when
/// no cycle exists, the budget runs out, or the chord pattern fails the bound.
pub fn orient_hamiltonian(g: &UndirectedGraph, budget: u64) -> Result<Option<UpperCertificate>> {
    check_preconditions(g)?;
    let HamiltonianSearch::Found(cycle) = find_hamiltonian_cycle(g, budget) else {
        return Ok(None);
    };
    let frame = HamiltonianFrame::new(g, cycle)?;
    match orient_via_cycle(g, &frame) {
        Ok(o) => Ok(Some(certificate(o, Method::HamiltonianCycle, 1))),
        Err(e) if recoverable(&e) => Ok(None),
        Err(e) => Err(e),
    }
}
