//! Exact oriented diameter by enumerating orientations.
//!
//! Edge 0 is pinned forward: reversing every arc preserves the diameter, so
//! the other half of the space is redundant. Orientations are walked in Gray
//! code order so that consecutive candidates differ in one arc, and any
//! candidate with a source or sink vertex (in particular a degree-2 vertex
//! without one in- and one out-arc) is discarded before the BFS.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU32, AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Distance, Orientation, UndirectedGraph};

/// Default limit on the number of edges for exhaustive search.
pub const DEFAULT_CAP: usize = 24;
/// Largest cap accepted at all.
pub const HARD_CAP: usize = 40;
/// Largest order the bitmask kernel handles.
pub const MAX_ORDER: usize = 32;

const CHUNK_BITS: u32 = 12;

/// Minimum diameter over all orientations, with a witness attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedDiameter {
    pub diameter: Distance,
    pub witness: Orientation,
    /// Number of orientations in the halved search space, `2^(m-1)`.
    pub examined: u64,
}

/// Bitmask view of a graph for fast repeated diameter checks.
struct Kernel {
    n: usize,
    ends: Vec<(usize, usize)>,
    degree: Vec<u32>,
    full: u32,
}

impl Kernel {
    fn new(g: &UndirectedGraph) -> Self {
        let n = g.order();
        Self {
            n,
            ends: g.edges().to_vec(),
            degree: (0..n).map(|v| g.degree(v) as u32).collect(),
            full: if n == 32 { u32::MAX } else { (1u32 << n) - 1 },
        }
    }

    /// Out-neighbor masks; bit `i` of `reversed` flips edge `i`.
    fn out_masks(&self, reversed: u64) -> [u32; MAX_ORDER] {
        let mut out = [0u32; MAX_ORDER];
        for (i, &(u, v)) in self.ends.iter().enumerate() {
            if reversed >> i & 1 == 1 {
                out[v] |= 1 << u;
            } else {
                out[u] |= 1 << v;
            }
        }
        out
    }

    #[inline]
    fn flip(&self, out: &mut [u32; MAX_ORDER], edge: usize) {
        let (u, v) = self.ends[edge];
        out[u] ^= 1 << v;
        out[v] ^= 1 << u;
    }

    /// Every vertex has an in-arc and an out-arc.
    #[inline]
    fn balanced(&self, out: &[u32; MAX_ORDER]) -> bool {
        (0..self.n).all(|v| {
            let o = out[v].count_ones();
            o >= 1 && o < self.degree[v]
        })
    }

    /// Diameter if it is at most `limit`, otherwise `None` (including the
    /// not-strongly-connected case).
    fn diameter_within(&self, out: &[u32; MAX_ORDER], limit: u32) -> Option<u32> {
        let mut worst = 0;
        for s in 0..self.n {
            let mut reached = 1u32 << s;
            let mut frontier = reached;
            let mut depth = 0;
            while reached != self.full {
                depth += 1;
                if depth > limit {
                    return None;
                }
                let mut next = 0u32;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= out[v];
                }
                next &= !reached;
                if next == 0 {
                    return None;
                }
                reached |= next;
                frontier = next;
            }
            worst = worst.max(depth);
        }
        Some(worst)
    }

    fn distance_of(&self, out: &[u32; MAX_ORDER]) -> Distance {
        if self.n > 1 && !self.balanced(out) {
            return Distance::Unreachable;
        }
        match self.diameter_within(out, self.n as u32) {
            Some(d) => Distance::Finite(d as usize),
            None => Distance::Unreachable,
        }
    }
}

#[inline]
fn gray(k: u64) -> u64 {
    k ^ (k >> 1)
}

fn check_cap(g: &UndirectedGraph, cap: usize) -> Result<()> {
    if cap > HARD_CAP {
        return Err(Error::Cap(format!(
            "cap {cap} exceeds the hard limit {HARD_CAP}"
        )));
    }
    if g.size() > cap {
        return Err(Error::Cap(format!(
            "graph has {} edges, exhaustive search cap is {cap}",
            g.size()
        )));
    }
    if g.order() > MAX_ORDER {
        return Err(Error::Cap(format!(
            "graph has {} vertices, exhaustive search supports at most {MAX_ORDER}",
            g.order()
        )));
    }
    Ok(())
}

fn witness_for(g: &UndirectedGraph, reversed: u64) -> Orientation {
    let forward = (0..g.size()).map(|i| reversed >> i & 1 == 0).collect();
    Orientation::from_directions(g.clone(), forward).expect("one direction per edge")
}

pub fn oriented_diameter(g: &UndirectedGraph) -> Result<OrientedDiameter> {
    oriented_diameter_with_cap(g, DEFAULT_CAP)
}

pub fn oriented_diameter_with_cap(g: &UndirectedGraph, cap: usize) -> Result<OrientedDiameter> {
    check_cap(g, cap)?;
    let n = g.order();
    let m = g.size();
    if m == 0 {
        let diameter = if n <= 1 {
            Distance::Finite(0)
        } else {
            Distance::Unreachable
        };
        return Ok(OrientedDiameter {
            diameter,
            witness: witness_for(g, 0),
            examined: 1,
        });
    }
    let kernel = Kernel::new(g);
    let free = (m - 1) as u32;
    let total = 1u64 << free;
    let chunk_bits = CHUNK_BITS.min(free);
    let chunks = 1u64 << (free - chunk_bits);
    let floor = match n {
        0 | 1 => 0,
        2 => 1,
        _ => 2,
    };
    // Unreachable is encoded as u32::MAX throughout.
    let best = AtomicU32::new(u32::MAX);
    let first_at_floor = AtomicUsize::new(usize::MAX);

    let per_chunk: Vec<(u32, u64)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c << chunk_bits;
            let end = start + (1u64 << chunk_bits);
            let mut out = kernel.out_masks(gray(start) << 1);
            let mut local = (u32::MAX, start);
            for k in start..end {
                if k > start {
                    kernel.flip(&mut out, (k.trailing_zeros() + 1) as usize);
                }
                if first_at_floor.load(Ordering::Relaxed) < c as usize {
                    break;
                }
                if n > 1 && !kernel.balanced(&out) {
                    continue;
                }
                let limit = best.load(Ordering::Relaxed).min(local.0);
                // strict improvement only within a chunk keeps the first index
                let cap = if local.0 == u32::MAX {
                    limit
                } else {
                    local.0 - 1
                }
                .min(limit);
                if let Some(d) = kernel.diameter_within(&out, cap.min(n as u32)) {
                    if d < local.0 {
                        local = (d, k);
                        best.fetch_min(d, Ordering::Relaxed);
                        if d == floor {
                            first_at_floor.fetch_min(c as usize, Ordering::Relaxed);
                            break;
                        }
                    }
                }
            }
            local
        })
        .collect();

    let (d, k) = per_chunk.into_iter().min().expect("at least one chunk");
    let diameter = if d == u32::MAX {
        Distance::Unreachable
    } else {
        Distance::Finite(d as usize)
    };
    let reversed = if d == u32::MAX { 0 } else { gray(k) << 1 };
    Ok(OrientedDiameter {
        diameter,
        witness: witness_for(g, reversed),
        examined: total,
    })
}

/// Histogram of diameters over all orientations with edge 0 pinned in the
/// given direction.
pub fn diameter_profile(
    g: &UndirectedGraph,
    first_edge_forward: bool,
    cap: usize,
) -> Result<BTreeMap<Distance, u64>> {
    check_cap(g, cap)?;
    let m = g.size();
    let kernel = Kernel::new(g);
    let mut hist = BTreeMap::new();
    if m == 0 {
        hist.insert(kernel.distance_of(&kernel.out_masks(0)), 1);
        return Ok(hist);
    }
    let pinned = u64::from(!first_edge_forward);
    for k in 0..1u64 << (m - 1) {
        let out = kernel.out_masks(k << 1 | pinned);
        *hist.entry(kernel.distance_of(&out)).or_insert(0) += 1;
    }
    Ok(hist)
}
