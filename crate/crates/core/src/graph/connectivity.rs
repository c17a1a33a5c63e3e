use std::collections::BTreeSet;

use super::{normalize, Edge, Orientation, UndirectedGraph};
use crate::error::{Error, Result};

/// Depth-first traversal state shared by bridge detection and the DFS
/// orientation: discovery times, lowpoints and the orientation each edge
/// receives (tree edges away from the root, back edges toward the ancestor).
struct DfsForest {
    low: Vec<usize>,
    disc: Vec<usize>,
    forward: Vec<bool>,
    bridges: BTreeSet<Edge>,
    components: usize,
}

fn dfs_forest(g: &UndirectedGraph) -> DfsForest {
    const UNSEEN: usize = usize::MAX;
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![UNSEEN; n];
    let mut forward = vec![true; g.size()];
    let mut bridges = BTreeSet::new();
    let mut timer = 0;
    let mut components = 0;
    // (vertex, edge used to enter it, next neighbor slot)
    let mut stack: Vec<(usize, Option<usize>, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        components += 1;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, None, 0));
        while let Some(&mut (v, via, ref mut slot)) = stack.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*slot) {
                *slot += 1;
                let e = g.edge_index(v, w).expect("neighbor edge exists");
                if Some(e) == via {
                    continue;
                }
                if disc[w] == UNSEEN {
                    forward[e] = v < w;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, Some(e), 0));
                } else if disc[w] < disc[v] {
                    // back edge to an ancestor
                    forward[e] = v < w;
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.insert(normalize(parent, v));
                    }
                }
            }
        }
    }
    DfsForest {
        low,
        disc,
        forward,
        bridges,
        components,
    }
}

/// Bridges of every component, as normalized pairs.
pub fn find_bridges(g: &UndirectedGraph) -> BTreeSet<Edge> {
    dfs_forest(g).bridges
}

pub fn is_connected(g: &UndirectedGraph) -> bool {
    g.order() > 0 && dfs_forest(g).components == 1
}

/// Connected and free of bridges.
pub fn is_bridgeless(g: &UndirectedGraph) -> bool {
    let forest = dfs_forest(g);
    g.order() > 0 && forest.components == 1 && forest.bridges.is_empty()
}

/// Depth-first orientation: tree arcs point away from the root and every
/// non-tree arc points to its ancestor. Strongly connected exactly when the
/// graph is bridgeless.
pub fn strong_orientation(g: &UndirectedGraph) -> Result<Orientation> {
    let forest = dfs_forest(g);
    if g.order() == 0 || forest.components != 1 {
        return Err(Error::Bridge(format!(
            "graph has {} connected components",
            forest.components
        )));
    }
    if let Some(&(u, v)) = forest.bridges.iter().next() {
        return Err(Error::Bridge(format!(
            "edge {u}-{v} is a bridge, one of {}",
            forest.bridges.len()
        )));
    }
    debug_assert!(forest
        .low
        .iter()
        .zip(&forest.disc)
        .skip(1)
        .all(|(l, d)| l <= d));
    Orientation::from_directions(g.clone(), forest.forward)
}
