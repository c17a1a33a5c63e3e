//! Orienting a graph around a Hamiltonian cycle.
//!
//! The cycle is directed forward, which leaves every pair at distance at most
//! `n - 2` except the pairs `(v_k, v_{k-1})`. Two nested chords, or three
//! pairwise crossing ones, directed against each other close short cycles
//! that together contain every such pair.
//!
//! Positions are 0-based indices into the cycle. A rotation `r` renumbers
//! position `p` as `(p - r) mod n`; chord pairs are always stored with the
//! smaller rotated position first.

use serde::{Deserialize, Serialize};

use super::verify_bound;
use crate::error::{Error, Result};
use crate::graph::{Edge, Orientation, UndirectedGraph};

/// A Hamiltonian cycle of a graph together with its chords.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamiltonianFrame {
    cycle: Vec<usize>,
    chords: Vec<Edge>,
}

impl HamiltonianFrame {
    /// Validates `cycle` against `g` and collects every non-cycle edge as a
    /// chord, in position order.
    pub fn new(g: &UndirectedGraph, cycle: Vec<usize>) -> Result<Self> {
        let n = g.order();
        if cycle.len() != n || n < 3 {
            return Err(Error::Argument(format!(
                "cycle has {} vertices, graph has {n}",
                cycle.len()
            )));
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in cycle.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return Err(Error::Argument(format!(
                    "vertex {v} repeated or out of range in cycle"
                )));
            }
            position[v] = i;
        }
        for i in 0..n {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            if !g.has_edge(a, b) {
                return Err(Error::Argument(format!(
                    "cycle step {a}-{b} is not an edge"
                )));
            }
        }
        let mut chords: Vec<Edge> = g
            .edges()
            .iter()
            .map(|&(u, v)| crate::graph::normalize(position[u], position[v]))
            .filter(|&(i, j)| j - i != 1 && j - i != n - 1)
            .collect();
        chords.sort_unstable();
        Ok(Self { cycle, chords })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    /// Chords as position pairs `(i, j)` with `i < j`.
    pub fn chords(&self) -> &[Edge] {
        &self.chords
    }

    /// Vertex at rotated position `p` under rotation `r`.
    #[inline]
    fn vertex(&self, rotation: usize, p: usize) -> usize {
        self.cycle[(p + rotation) % self.order()]
    }
}

/// Which chords close the short cycles, in rotated coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChordPattern {
    /// `outer.0 <= inner.0 < inner.1 < outer.1`. The outer chord is directed
    /// backward and the inner one forward.
    NestedPair {
        rotation: usize,
        outer: Edge,
        inner: Edge,
        /// Indices of the two chords in the classified list.
        selected: [usize; 2],
    },
    /// `i1 < i2 < i3 < j1 < j2 < j3`. First and third chords are directed
    /// backward, the middle one forward.
    CrossingTriple {
        rotation: usize,
        chords: [Edge; 3],
        selected: [usize; 3],
    },
}

impl ChordPattern {
    pub fn rotation(&self) -> usize {
        match self {
            ChordPattern::NestedPair { rotation, .. }
            | ChordPattern::CrossingTriple { rotation, .. } => *rotation,
        }
    }

    /// The selected chords as arcs in rotated coordinates.
    pub fn arcs(&self) -> Vec<Edge> {
        match *self {
            ChordPattern::NestedPair { outer, inner, .. } => vec![(outer.1, outer.0), inner],
            ChordPattern::CrossingTriple {
                chords: [a, b, c], ..
            } => {
                vec![(a.1, a.0), b, (c.1, c.0)]
            }
        }
    }

    pub fn selected(&self) -> &[usize] {
        match self {
            ChordPattern::NestedPair { selected, .. } => selected,
            ChordPattern::CrossingTriple { selected, .. } => selected,
        }
    }
}

#[inline]
fn rotate(n: usize, rotation: usize, (i, j): Edge) -> Edge {
    crate::graph::normalize((i + n - rotation) % n, (j + n - rotation) % n)
}

/// Two chords cross when their four endpoints are distinct and interleave
/// around the cycle. Chords sharing an endpoint never cross.
pub fn chords_cross((a, b): Edge, (c, d): Edge) -> bool {
    let inside = |x: usize| a < x && x < b;
    a != c && a != d && b != c && b != d && (inside(c) != inside(d))
}

fn validate_chords(n: usize, chords: &[Edge]) -> Result<Vec<Edge>> {
    if chords.len() < 3 {
        return Err(Error::Argument(format!(
            "need at least 3 chords, got {}",
            chords.len()
        )));
    }
    let mut normalized = Vec::with_capacity(chords.len());
    for &(i, j) in chords {
        let (i, j) = crate::graph::normalize(i, j);
        if j >= n || j - i <= 1 || j - i == n - 1 {
            return Err(Error::Argument(format!(
                "({i}, {j}) is not a chord of an {n}-cycle"
            )));
        }
        if normalized.contains(&(i, j)) {
            return Err(Error::Argument(format!("chord ({i}, {j}) listed twice")));
        }
        normalized.push((i, j));
    }
    Ok(normalized)
}

/// Finds a nested pair (smallest rotation, then smallest chord indices), or
/// failing that a crossing triple among the first three chords.
pub fn classify_chords(n: usize, chords: &[Edge]) -> Result<ChordPattern> {
    let chords = validate_chords(n, chords)?;
    for rotation in 0..n {
        let rotated: Vec<Edge> = chords.iter().map(|&c| rotate(n, rotation, c)).collect();
        for (a, &outer) in rotated.iter().enumerate() {
            for (b, &inner) in rotated.iter().enumerate() {
                if a != b && outer.0 <= inner.0 && inner.1 < outer.1 {
                    return Ok(ChordPattern::NestedPair {
                        rotation,
                        outer,
                        inner,
                        selected: [a, b],
                    });
                }
            }
        }
    }
    for rotation in 0..n {
        let mut triple: Vec<(Edge, usize)> = (0..3)
            .map(|k| (rotate(n, rotation, chords[k]), k))
            .collect();
        triple.sort_unstable();
        let [(a, ia), (b, ib), (c, ic)] = [triple[0], triple[1], triple[2]];
        if a.0 < b.0 && b.0 < c.0 && c.0 < a.1 && a.1 < b.1 && b.1 < c.1 {
            return Ok(ChordPattern::CrossingTriple {
                rotation,
                chords: [a, b, c],
                selected: [ia, ib, ic],
            });
        }
    }
    Err(Error::Internal(
        "chords are pairwise crossing but admit no interleaving rotation".into(),
    ))
}

/// The short directed cycles closed by the selected chords, as vertex
/// sequences in travel order.
pub fn selected_cycles(frame: &HamiltonianFrame, pattern: &ChordPattern) -> Vec<Vec<usize>> {
    let n = frame.order();
    let r = pattern.rotation();
    let span = |from: usize, to: usize| -> Vec<usize> {
        let len = (to + n - from) % n + 1;
        (0..len).map(|k| frame.vertex(r, (from + k) % n)).collect()
    };
    match *pattern {
        ChordPattern::NestedPair { outer, inner, .. } => {
            vec![span(outer.0, outer.1), span(inner.1, inner.0)]
        }
        ChordPattern::CrossingTriple {
            chords: [a, b, c], ..
        } => {
            vec![span(a.0, a.1), span(b.1, b.0), span(c.0, c.1)]
        }
    }
}

fn check_size(g: &UndirectedGraph) -> Result<()> {
    let n = g.order();
    if n < 5 {
        return Err(Error::Precondition(format!(
            "order must be at least 5, got {n}"
        )));
    }
    if g.size() < n + 3 {
        return Err(Error::Precondition(format!(
            "size must be at least n+3 = {}, got {}",
            n + 3,
            g.size()
        )));
    }
    Ok(())
}

/// Directs the cycle forward, the selected chords per the chord pattern, and
/// every other chord from lower to higher rotated position. The result is
/// checked to have diameter at most `n - 2`.
pub fn orient_via_cycle(g: &UndirectedGraph, frame: &HamiltonianFrame) -> Result<Orientation> {
    check_size(g)?;
    let n = g.order();
    if frame.order() != n {
        return Err(Error::Argument("frame does not match the graph".into()));
    }
    let pattern = classify_chords(n, frame.chords())?;
    let r = pattern.rotation();
    let mut arcs: Vec<Edge> = (0..n)
        .map(|k| (frame.cycle[k], frame.cycle[(k + 1) % n]))
        .collect();
    let chosen = pattern.arcs();
    arcs.extend(
        chosen
            .iter()
            .map(|&(p, q)| (frame.vertex(r, p), frame.vertex(r, q))),
    );
    let selected = pattern.selected();
    for (idx, &chord) in frame.chords().iter().enumerate() {
        if !selected.contains(&idx) {
            let (p, q) = rotate(n, r, chord);
            arcs.push((frame.vertex(r, p), frame.vertex(r, q)));
        }
    }
    let o = Orientation::from_arcs(g.clone(), arcs)?;
    verify_bound(&o, n - 2)?;
    Ok(o)
}
