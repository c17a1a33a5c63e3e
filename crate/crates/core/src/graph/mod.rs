//! Simple undirected graphs, their orientations, and the basic traversals
//! everything else is built from.
//!
//! Vertices are dense identifiers `0..n`. Edges are stored as normalized
//! pairs `(u, v)` with `u < v`, sorted lexicographically; an edge's index in
//! that list is its identity everywhere else in the crate (orientations,
//! exhaustive search masks, file output order).

mod connectivity;
mod distance;
mod hamiltonian;

pub use connectivity::{find_bridges, is_bridgeless, is_connected, strong_orientation};
pub use distance::{all_pairs_distances, bfs_distances, diameter, is_strongly_connected, Distance};
pub use hamiltonian::{find_hamiltonian_cycle, HamiltonianSearch};

use std::fmt;

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

#[inline]
pub fn normalize(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Builds a graph, rejecting loops, repeated pairs and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            list.push(normalize(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &list {
            adj[u].push(v);
            adj[v].push(u);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Self {
            n,
            edges: list,
            adj,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    /// The cycle `0-1-...-(n-1)-0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Range(format!(
                "a cycle needs at least 3 vertices, got {n}"
            )));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Position of the edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&normalize(u, v)).ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degrees.sort_unstable();
        degrees
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Argument(format!(
                "permutation has length {}, graph has order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Argument("not a permutation".into()));
            }
        }
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    pub fn without_edge(&self, index: usize) -> Self {
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != index)
            .map(|(_, &e)| e);
        Self::new(self.n, edges).expect("subgraph of a simple graph is simple")
    }
}

impl fmt::Debug for UndirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UndirectedGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// One direction for every edge of a base graph.
///
/// `forward[i]` is true when edge `edges()[i] = (u, v)` is directed `u -> v`
/// (lower identifier to higher).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    base: UndirectedGraph,
    forward: Vec<bool>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl Orientation {
    pub fn from_directions(base: UndirectedGraph, forward: Vec<bool>) -> Result<Self> {
        if forward.len() != base.size() {
            return Err(Error::Argument(format!(
                "{} directions for {} edges",
                forward.len(),
                base.size()
            )));
        }
        let n = base.order();
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for (&(u, v), &fwd) in base.edges().iter().zip(&forward) {
            let (t, h) = if fwd { (u, v) } else { (v, u) };
            out[t].push(h);
            inn[h].push(t);
        }
        for row in out.iter_mut().chain(inn.iter_mut()) {
            row.sort_unstable();
        }
        Ok(Self {
            base,
            forward,
            out,
            inn,
        })
    }

    /// Builds an orientation from explicit arcs; every edge of `base` must
    /// appear exactly once, in either direction.
    pub fn from_arcs<I>(base: UndirectedGraph, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut forward = vec![None; base.size()];
        for (t, h) in arcs {
            let idx = base
                .edge_index(t, h)
                .filter(|_| t != h && t < base.order() && h < base.order())
                .ok_or_else(|| Error::Argument(format!("arc {t}->{h} is not an edge")))?;
            if forward[idx].replace(t < h).is_some() {
                return Err(Error::Argument(format!("edge {t}-{h} oriented twice")));
            }
        }
        let forward = forward
            .into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.ok_or_else(|| {
                    let (u, v) = base.edges()[i];
                    Error::Argument(format!("edge {u}-{v} has no direction"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_directions(base, forward)
    }

    #[inline]
    pub fn base(&self) -> &UndirectedGraph {
        &self.base
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.base.order()
    }

    #[inline]
    pub fn directions(&self) -> &[bool] {
        &self.forward
    }

    /// Arc for edge `index` as `(tail, head)`.
    #[inline]
    pub fn arc(&self, index: usize) -> Edge {
        let (u, v) = self.base.edges()[index];
        if self.forward[index] {
            (u, v)
        } else {
            (v, u)
        }
    }

    /// Arcs in base edge order.
    pub fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.forward.len()).map(move |i| self.arc(i))
    }

    #[inline]
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    #[inline]
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn has_arc(&self, tail: usize, head: usize) -> bool {
        tail < self.order() && self.out[tail].binary_search(&head).is_ok()
    }

    /// Every arc flipped.
    pub fn reversed(&self) -> Self {
        let forward = self.forward.iter().map(|f| !f).collect();
        Self::from_directions(self.base.clone(), forward).expect("same edge count")
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<_> = self.arcs().collect();
        write!(f, "Orientation(n={}, arcs={:?})", self.order(), arcs)
    }
}
