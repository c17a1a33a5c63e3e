//! Canonical labeling by partition refinement and individualization.
//!
//! The code of a graph is the lexicographically smallest upper-triangle
//! adjacency string over all leaves of the individualization tree. Twins
//! (vertices with equal neighborhoods apart from each other) are explored
//! once per cell, since swapping them is an automorphism fixing the
//! current partition.

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

/// Largest order accepted by [`canonical_code`].
pub const CANON_CAP: usize = 10;

/// Byte-string certificate: the order, then the canonical upper triangle
/// packed MSB-first.
pub type CanonicalCode = Vec<u8>;

pub fn canonical_code(g: &UndirectedGraph) -> Result<CanonicalCode> {
    if g.order() > CANON_CAP {
        return Err(Error::Cap(format!(
            "canonical codes are limited to {CANON_CAP} vertices, graph has {}",
            g.order()
        )));
    }
    Ok(canonical_form(g).0)
}

/// Code plus the labeling achieving it: vertex `v` maps to `labeling[v]`.
pub(crate) fn canonical_form(g: &UndirectedGraph) -> (CanonicalCode, Vec<usize>) {
    let n = g.order();
    assert!(n <= 32, "canonical form supports at most 32 vertices");
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best: Option<(CanonicalCode, Vec<usize>)> = None;
    let cells = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    search(&adj, cells, &mut best);
    best.unwrap_or_else(|| (vec![0], Vec::new()))
}

/// The canonical relabeling of `g`.
pub(crate) fn canonical_graph(g: &UndirectedGraph) -> (CanonicalCode, UndirectedGraph) {
    let (code, labeling) = canonical_form(g);
    let relabeled = g.relabel(&labeling).expect("labeling is a permutation");
    (code, relabeled)
}

pub fn code_hex(code: &[u8]) -> String {
    code.iter().map(|b| format!("{b:02x}")).collect()
}

fn refine(adj: &[u32], cells: &mut Vec<Vec<usize>>) {
    loop {
        let masks: Vec<u32> = cells
            .iter()
            .map(|c| c.iter().fold(0u32, |acc, &v| acc | 1 << v))
            .collect();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

fn encode(adj: &[u32], cells: &[Vec<usize>]) -> (CanonicalCode, Vec<usize>) {
    let n = adj.len();
    let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
    let mut labeling = vec![0; n];
    for (label, &v) in order.iter().enumerate() {
        labeling[v] = label;
    }
    let mut code = Vec::with_capacity(1 + n * n / 16);
    code.push(n as u8);
    let mut byte = 0u8;
    let mut filled = 0;
    for i in 0..n {
        for j in i + 1..n {
            byte = byte << 1 | u8::from(adj[order[i]] >> order[j] & 1 == 1);
            filled += 1;
            if filled == 8 {
                code.push(byte);
                byte = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        code.push(byte << (8 - filled));
    }
    (code, labeling)
}

fn search(adj: &[u32], mut cells: Vec<Vec<usize>>, best: &mut Option<(CanonicalCode, Vec<usize>)>) {
    refine(adj, &mut cells);
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let leaf = encode(adj, &cells);
        if best.as_ref().is_none_or(|b| leaf.0 < b.0) {
            *best = Some(leaf);
        }
        return;
    };
    let twins = |u: usize, v: usize| (adj[u] & !(1 << v)) == (adj[v] & !(1 << u));
    let mut explored: Vec<usize> = Vec::new();
    for &v in &cells[target] {
        if explored.iter().any(|&u| twins(u, v)) {
            continue;
        }
        explored.push(v);
        let rest: Vec<usize> = cells[target].iter().copied().filter(|&w| w != v).collect();
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(vec![v]);
        child.push(rest);
        child.extend_from_slice(&cells[target + 1..]);
        search(adj, child, best);
    }
}
