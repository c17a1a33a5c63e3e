//! Isomorphism classes of small graphs by vertex augmentation.
//!
//! Every graph on `n` vertices is some graph on `n - 1` vertices plus one
//! vertex joined to a subset of the old ones, so extending one representative
//! per class and deduplicating by canonical code yields all classes.

use std::collections::BTreeMap;

use super::canon::{canonical_graph, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{is_bridgeless, UndirectedGraph};

/// Largest order enumerated by default.
pub const ENUMERATION_CAP: usize = 6;
/// Largest order enumerated when the extended range is requested.
pub const EXTENDED_ENUMERATION_CAP: usize = 7;

fn check(n: usize, extended: bool) -> Result<()> {
    let cap = if extended {
        EXTENDED_ENUMERATION_CAP
    } else {
        ENUMERATION_CAP
    };
    if n > cap {
        let hint = if extended {
            ""
        } else {
            " (order 7 needs the extended range)"
        };
        return Err(Error::Cap(format!(
            "enumeration is limited to order {cap}{hint}, got {n}"
        )));
    }
    Ok(())
}

/// One canonical representative per isomorphism class of graphs of order
/// `n`, ordered by (size, canonical code).
pub fn enumerate_graphs(n: usize, extended: bool) -> Result<Vec<(CanonicalCode, UndirectedGraph)>> {
    check(n, extended)?;
    if n == 0 {
        return Ok(vec![(vec![0], UndirectedGraph::empty(0))]);
    }
    let mut level: Vec<UndirectedGraph> = vec![UndirectedGraph::empty(1)];
    let mut keyed = vec![(canonical_graph(&level[0]).0, level[0].clone())];
    for k in 2..=n {
        let mut classes: BTreeMap<(usize, CanonicalCode), UndirectedGraph> = BTreeMap::new();
        for g in &level {
            for subset in 0u32..1 << (k - 1) {
                let new_edges = (0..k - 1)
                    .filter(|v| subset >> v & 1 == 1)
                    .map(|v| (v, k - 1));
                let h = UndirectedGraph::new(k, g.edges().iter().copied().chain(new_edges))
                    .expect("augmentation stays simple");
                let (code, canon) = canonical_graph(&h);
                classes.entry((canon.size(), code)).or_insert(canon);
            }
        }
        keyed = classes
            .into_iter()
            .map(|((_, code), g)| (code, g))
            .collect();
        level = keyed.iter().map(|(_, g)| g.clone()).collect();
    }
    Ok(keyed)
}

/// One representative per isomorphism class of bridgeless graphs of order
/// `n` (at most [`ENUMERATION_CAP`]).
pub fn enumerate_bridgeless(n: usize) -> Result<Vec<UndirectedGraph>> {
    enumerate_bridgeless_range(n, false)
}

/// As [`enumerate_bridgeless`], admitting order up to [`EXTENDED_ENUMERATION_CAP`].
pub fn enumerate_bridgeless_range(n: usize, extended: bool) -> Result<Vec<UndirectedGraph>> {
    Ok(enumerate_graphs(n, extended)?
        .into_iter()
        .map(|(_, g)| g)
        .filter(is_bridgeless)
        .collect())
}
