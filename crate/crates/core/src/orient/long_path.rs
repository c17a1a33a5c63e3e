//! Repairing a strong orientation whose diameter is `n - 1`.
//!
//! A pair at distance `n - 1` is joined by a spanning directed path `P`
//! (`x1 = P[0]`, `x2 = P[n-1]`). Because `P` is a shortest path, every arc of
//! the orientation that is not on `P` points backward along it. The entry arc
//! `y1 -> x1` with `y1` furthest along `P` and the exit arc `x2 -> y2` with
//! `y2` earliest on `P` decide the layout:
//!
//! * the spans `P[x1, y1]` and `P[y2, x2]` overlap: keep `P`, both arcs, and
//!   add two spare edges that shortcut `P` and the rerouted spanning path `Q`;
//! * they are disjoint: a return path `R` from the tail span back to the head
//!   span lets a middle stretch of `P` be reversed into a strongly connected
//!   core, with the exact shape depending on how `R` leaves and re-enters `P`.
//!
//! Every construction here ends with a BFS check of the `n - 2` bound.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::verify_bound;
use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, is_strongly_connected, Distance, Edge, Orientation, UndirectedGraph,
};

/// Layout of the entry/exit arcs and, for disjoint spans, the shape of the
/// return path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    /// `pos(y2) <= pos(y1)`: the entry and exit spans overlap.
    Overlap,
    /// Disjoint spans; the return path is a single arc.
    DirectReturn,
    /// Disjoint spans; the return path starts strictly after `y2`.
    ReturnFromInterior,
    /// Return path starts at `y2` and follows `P` forward after its first arc.
    ReturnWithRun,
    /// Return path starts at `y2` and takes a second backward arc immediately.
    ReturnTwoJumps,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::Overlap => "overlap",
            CaseTag::DirectReturn => "direct-return",
            CaseTag::ReturnFromInterior => "return-from-interior",
            CaseTag::ReturnWithRun => "return-with-run",
            CaseTag::ReturnTwoJumps => "return-two-jumps",
        }
    }
}

/// A spanning shortest path at distance `n - 1` with its entry and exit arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongPathFrame {
    orientation: Orientation,
    path: Vec<usize>,
    position: Vec<usize>,
    /// `y1`, tail of the entry arc `y1 -> x1`.
    pub entry_tail: usize,
    /// `y2`, head of the exit arc `x2 -> y2`.
    pub exit_head: usize,
}

/// Result of looking for a frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrameOutcome {
    /// The orientation already has diameter at most `n - 2`.
    WithinBound,
    Frame(LongPathFrame),
    /// The arc `x2 -> x1` exists, so `P` closes into this Hamiltonian cycle.
    HamiltonianDetected(Vec<usize>),
}

impl LongPathFrame {
    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// `P` as a vertex sequence from `x1` to `x2`.
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn head(&self) -> usize {
        self.path[0]
    }

    pub fn tail(&self) -> usize {
        self.path[self.path.len() - 1]
    }

    pub fn entry_arc(&self) -> Edge {
        (self.entry_tail, self.head())
    }

    pub fn exit_arc(&self) -> Edge {
        (self.tail(), self.exit_head)
    }

    /// True when `pos(y2) <= pos(y1)`.
    pub fn spans_overlap(&self) -> bool {
        self.position(self.exit_head) <= self.position(self.entry_tail)
    }

    fn on_path(&self, (t, h): Edge) -> bool {
        self.position[h] == self.position[t] + 1
    }
}

/// Ordered pairs at distance exactly `n - 1`, lexicographically.
pub fn long_pairs(o: &Orientation) -> Vec<Edge> {
    let n = o.order();
    if n < 2 {
        return Vec::new();
    }
    let target = Distance::Finite(n - 1);
    (0..n)
        .flat_map(|s| {
            bfs_distances(o, s)
                .into_iter()
                .enumerate()
                .filter(move |&(_, d)| d == target)
                .map(move |(t, _)| (s, t))
        })
        .collect()
}

/// Frame for the lexicographically first pair at distance `n - 1`.
pub fn build_long_path_frame(o: &Orientation) -> Result<FrameOutcome> {
    if !is_strongly_connected(o) {
        return Err(Error::Argument(
            "orientation is not strongly connected".into(),
        ));
    }
    match long_pairs(o).first() {
        None => Ok(FrameOutcome::WithinBound),
        Some(&(x1, x2)) => build_long_path_frame_for(o, x1, x2),
    }
}

/// Frame for a given pair, which must be at distance `n - 1`.
pub fn build_long_path_frame_for(o: &Orientation, x1: usize, x2: usize) -> Result<FrameOutcome> {
    let n = o.order();
    if !is_strongly_connected(o) {
        return Err(Error::Argument(
            "orientation is not strongly connected".into(),
        ));
    }
    if x1 >= n || x2 >= n {
        return Err(Error::Argument(format!("pair ({x1}, {x2}) out of range")));
    }
    // shortest path by BFS with parents; smallest-id parent wins ties
    let mut parent = vec![usize::MAX; n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::from([x1]);
    dist[x1] = 0;
    while let Some(v) = queue.pop_front() {
        for &w in o.out_neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    if dist[x2] != n - 1 {
        return Err(Error::Argument(format!(
            "pair ({x1}, {x2}) is at distance {}, not {}",
            dist[x2],
            n - 1
        )));
    }
    let mut path = vec![x2];
    while *path.last().unwrap() != x1 {
        path.push(parent[*path.last().unwrap()]);
    }
    path.reverse();
    let mut position = vec![0; n];
    for (i, &v) in path.iter().enumerate() {
        position[v] = i;
    }
    if o.has_arc(x2, x1) {
        return Ok(FrameOutcome::HamiltonianDetected(path));
    }
    // x1 has no in-arc on P and x2 no out-arc, so these are all off-path
    let entry_tail = *o
        .in_neighbors(x1)
        .iter()
        .max_by_key(|&&y| position[y])
        .ok_or_else(|| Error::Internal("start of the long path has no in-arc".into()))?;
    let exit_head = *o
        .out_neighbors(x2)
        .iter()
        .min_by_key(|&&y| position[y])
        .ok_or_else(|| Error::Internal("end of the long path has no out-arc".into()))?;
    Ok(FrameOutcome::Frame(LongPathFrame {
        orientation: o.clone(),
        path,
        position,
        entry_tail,
        exit_head,
    }))
}

/// Path from the exit span `P[y2, x2]` back to the entry span `P[x1, y1]`
/// meeting each span only at its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReturnPath {
    /// Vertex sequence from `a2` (on the exit span) to `a1` (on the entry span).
    pub vertices: Vec<usize>,
    /// Arcs of the path that are not on `P`, in travel order.
    pub jumps: Vec<Edge>,
    pub case: CaseTag,
}

impl ReturnPath {
    /// `a2`.
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    /// `a1`.
    pub fn end(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    /// `b2`, head of the first jump.
    pub fn first_landing(&self) -> usize {
        self.jumps[0].1
    }

    /// `c2`, tail of the second jump.
    pub fn second_jump_tail(&self) -> Option<usize> {
        self.jumps.get(1).map(|j| j.0)
    }

    /// `b1`, tail of the last jump.
    pub fn last_jump_tail(&self) -> usize {
        self.jumps.last().unwrap().0
    }

    /// `c1`, head of the next-to-last jump: where the final forward run
    /// toward `b1` starts.
    pub fn last_run_start(&self) -> Option<usize> {
        self.jumps.len().checked_sub(2).map(|i| self.jumps[i].1)
    }

    fn index_of(&self, v: usize) -> usize {
        self.vertices
            .iter()
            .position(|&w| w == v)
            .expect("vertex on return path")
    }

    fn arcs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }
}

const RETURN_SEARCH_BUDGET: u64 = 200_000;

/// The shortest return path, ties broken by smallest vertex identifiers.
pub fn find_return_path(frame: &LongPathFrame) -> Result<ReturnPath> {
    return_paths(frame, 1)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Internal("no return path despite strong connectivity".into()))
}

/// Up to `limit` return paths ordered by length, then lexicographically.
pub fn return_paths(frame: &LongPathFrame, limit: usize) -> Result<Vec<ReturnPath>> {
    if frame.spans_overlap() {
        return Err(Error::Argument(
            "entry and exit spans overlap; no return path needed".into(),
        ));
    }
    let o = &frame.orientation;
    let n = o.order();
    let y1 = frame.position(frame.entry_tail);
    let y2 = frame.position(frame.exit_head);
    // 0: entry span, 1: middle, 2: exit span
    let zone = |v: usize| {
        let p = frame.position(v);
        if p <= y1 {
            0
        } else if p < y2 {
            1
        } else {
            2
        }
    };

    // shortest length by multi-source BFS through middle vertices
    let mut dist = vec![usize::MAX; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| zone(v) == 2).collect();
    for &s in &queue {
        dist[s] = 0;
    }
    let mut shortest = None;
    while let Some(v) = queue.pop_front() {
        for &w in o.out_neighbors(v) {
            match zone(w) {
                0 => {
                    shortest = Some(shortest.map_or(dist[v] + 1, |s: usize| s.min(dist[v] + 1)));
                }
                1 if dist[w] == usize::MAX => {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
                _ => {}
            }
        }
    }
    let shortest = shortest
        .ok_or_else(|| Error::Internal("no return path despite strong connectivity".into()))?;

    struct Walk<'a> {
        o: &'a Orientation,
        zone: &'a dyn Fn(usize) -> u8,
        used: Vec<bool>,
        stack: Vec<usize>,
        found: Vec<Vec<usize>>,
        limit: usize,
        budget: u64,
    }
    impl Walk<'_> {
        fn go(&mut self, remaining: usize) {
            if self.found.len() >= self.limit || self.budget == 0 {
                return;
            }
            self.budget -= 1;
            let v = *self.stack.last().unwrap();
            for &w in self.o.out_neighbors(v) {
                match (self.zone)(w) {
                    0 if remaining == 1 => {
                        self.stack.push(w);
                        self.found.push(self.stack.clone());
                        self.stack.pop();
                        if self.found.len() >= self.limit {
                            return;
                        }
                    }
                    1 if remaining > 1 && !self.used[w] => {
                        self.used[w] = true;
                        self.stack.push(w);
                        self.go(remaining - 1);
                        self.stack.pop();
                        self.used[w] = false;
                    }
                    _ => {}
                }
            }
        }
    }

    let zone_u8 = |v: usize| zone(v) as u8;
    let sources: Vec<usize> = (0..n).filter(|&v| zone(v) == 2).collect();
    let middle = (0..n).filter(|&v| zone(v) == 1).count();
    let mut walk = Walk {
        o,
        zone: &zone_u8,
        used: vec![false; n],
        stack: Vec::new(),
        found: Vec::new(),
        limit,
        budget: RETURN_SEARCH_BUDGET,
    };
    for len in shortest..=middle + 1 {
        for &s in &sources {
            walk.stack.clear();
            walk.stack.push(s);
            walk.go(len);
        }
        if walk.found.len() >= limit || walk.budget == 0 {
            break;
        }
    }
    walk.found
        .into_iter()
        .map(|vertices| classify_return(frame, vertices))
        .collect()
}

fn classify_return(frame: &LongPathFrame, vertices: Vec<usize>) -> Result<ReturnPath> {
    let jumps: Vec<Edge> = vertices
        .windows(2)
        .map(|w| (w[0], w[1]))
        .filter(|&a| !frame.on_path(a))
        .collect();
    let (a2, a1) = (vertices[0], *vertices.last().unwrap());
    if a1 == frame.head() || a2 == frame.tail() {
        return Err(Error::Internal(format!(
            "return path {vertices:?} ends at an endpoint of the long path"
        )));
    }
    let first = (vertices[0], vertices[1]);
    let last = (vertices[vertices.len() - 2], a1);
    if jumps.first() != Some(&first) || jumps.last() != Some(&last) {
        return Err(Error::Internal(format!(
            "return path {vertices:?} does not start and end with off-path arcs"
        )));
    }
    let case = if jumps.len() == 1 {
        CaseTag::DirectReturn
    } else if a2 != frame.exit_head {
        CaseTag::ReturnFromInterior
    } else if jumps[0].1 != jumps[1].0 {
        CaseTag::ReturnWithRun
    } else {
        CaseTag::ReturnTwoJumps
    };
    Ok(ReturnPath {
        vertices,
        jumps,
        case,
    })
}

/// An orientation produced by one of the layouts, with the arcs the layout
/// prescribes (`mandated`, including `spares`) kept apart from those
/// inherited from the input orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseOrientation {
    pub orientation: Orientation,
    pub case: CaseTag,
    pub mandated: Vec<Edge>,
    pub spares: Vec<Edge>,
}

struct Demands<'a> {
    g: &'a UndirectedGraph,
    forward: Vec<Option<bool>>,
    order: Vec<Edge>,
}

impl<'a> Demands<'a> {
    fn new(g: &'a UndirectedGraph) -> Self {
        Self {
            g,
            forward: vec![None; g.size()],
            order: Vec::new(),
        }
    }

    fn arc(&mut self, t: usize, h: usize) -> Result<()> {
        let idx = self
            .g
            .edge_index(t, h)
            .ok_or_else(|| Error::Internal(format!("{t}->{h} is not an edge")))?;
        match self.forward[idx] {
            None => {
                self.forward[idx] = Some(t < h);
                self.order.push((t, h));
                Ok(())
            }
            Some(f) if f == (t < h) => Ok(()),
            Some(_) => Err(Error::Conflict { u: t, v: h }),
        }
    }

    fn run(&mut self, path: &[usize], from: usize, to: usize) -> Result<()> {
        (from..to).try_for_each(|k| self.arc(path[k], path[k + 1]))
    }

    fn reversed_run(&mut self, path: &[usize], from: usize, to: usize) -> Result<()> {
        (from..to).try_for_each(|k| self.arc(path[k + 1], path[k]))
    }

    /// `Some(true)` if `t -> h` is demanded, `Some(false)` if `h -> t` is.
    fn demanded(&self, t: usize, h: usize) -> Option<bool> {
        let idx = self.g.edge_index(t, h)?;
        self.forward[idx].map(|f| f == (t < h))
    }

    fn is_free(&self, idx: usize) -> bool {
        self.forward[idx].is_none()
    }

    /// Free edges in index order.
    fn free_edges(&self) -> Vec<usize> {
        (0..self.g.size()).filter(|&i| self.is_free(i)).collect()
    }

    /// Directs free edge `idx` from lower to higher `rank`.
    fn spare(&mut self, idx: usize, rank: &dyn Fn(usize) -> usize) -> Result<Edge> {
        let (u, v) = self.g.edges()[idx];
        let arc = if rank(u) < rank(v) { (u, v) } else { (v, u) };
        self.arc(arc.0, arc.1)?;
        Ok(arc)
    }

    fn finish(self, base: &Orientation) -> Result<(Orientation, Vec<Edge>)> {
        let forward = self
            .forward
            .iter()
            .zip(base.directions())
            .map(|(d, &inherited)| d.unwrap_or(inherited))
            .collect();
        Ok((
            Orientation::from_directions(self.g.clone(), forward)?,
            self.order,
        ))
    }
}

fn spanning_rank(seq: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut rank = vec![usize::MAX; n];
    for (i, &v) in seq.iter().enumerate() {
        rank[v] = i;
    }
    if seq.len() != n || rank.contains(&usize::MAX) {
        return Err(Error::Internal(format!(
            "rerouted path {seq:?} is not spanning"
        )));
    }
    Ok(rank)
}

/// Builds the orientation prescribed by the frame's layout. Disjoint spans
/// need a return path; overlapping spans ignore it.
pub fn apply_case(frame: &LongPathFrame, ret: Option<&ReturnPath>) -> Result<CaseOrientation> {
    let o = &frame.orientation;
    let g = o.base();
    let n = g.order();
    if g.size() < n + 3 {
        return Err(Error::Precondition(format!(
            "size must be at least n+3 = {}, got {}",
            n + 3,
            g.size()
        )));
    }
    let p = &frame.path;
    let pos = |v: usize| frame.position(v);
    let (y1, y2) = (frame.entry_tail, frame.exit_head);
    let mut d = Demands::new(g);
    let mut spares = Vec::new();

    let case = if frame.spans_overlap() {
        d.run(p, 0, n - 1)?;
        d.arc(y1, p[0])?;
        d.arc(p[n - 1], y2)?;
        // Q = P[u1, x2] + e2 + P[y2, y1] + e1 + P[x1, u2]
        let q: Vec<usize> = p[pos(y1) + 1..]
            .iter()
            .chain(&p[pos(y2)..=pos(y1)])
            .chain(&p[..pos(y2)])
            .copied()
            .collect();
        let q_rank = spanning_rank(&q, n)?;
        if let Some(w) = q.windows(2).find(|w| d.demanded(w[0], w[1]) != Some(true)) {
            return Err(Error::Internal(format!(
                "rerouted path step {}->{} is not mandated",
                w[0], w[1]
            )));
        }
        let free = d.free_edges();
        if free.len() < 2 {
            return Err(Error::Precondition("fewer than two spare edges".into()));
        }
        spares.push(d.spare(free[0], &|v| pos(v))?);
        spares.push(d.spare(free[1], &|v| q_rank[v])?);
        CaseTag::Overlap
    } else {
        let r = ret.ok_or_else(|| Error::Argument("disjoint spans need a return path".into()))?;
        let (a2, a1) = (r.start(), r.end());
        match r.case {
            CaseTag::DirectReturn => {
                d.run(p, 0, pos(a1))?;
                d.reversed_run(p, pos(a1), pos(a2))?;
                d.arc(a1, a2)?;
                d.run(p, pos(a2), n - 1)?;
                d.arc(y1, p[0])?;
                d.arc(p[n - 1], y2)?;
                if a1 == y1 && a2 == y2 {
                    // the one pair whose detour spans everything:
                    // Q = P[succ(a2), x2] + e2 + reversed P[y1, y2] + e1 + P[x1, pred(a1)]
                    let q: Vec<usize> = p[pos(a2) + 1..]
                        .iter()
                        .chain(p[pos(y1)..=pos(y2)].iter().rev())
                        .chain(&p[..pos(a1)])
                        .copied()
                        .collect();
                    let q_rank = spanning_rank(&q, n)?;
                    let free = d.free_edges();
                    let first = *free
                        .first()
                        .ok_or_else(|| Error::Precondition("no spare edge".into()))?;
                    spares.push(d.spare(first, &|v| q_rank[v])?);
                }
            }
            CaseTag::ReturnFromInterior => {
                d.run(p, 0, pos(a1))?;
                d.reversed_run(p, pos(a1), pos(a2))?;
                for (t, h) in r.arcs() {
                    d.arc(h, t)?;
                }
                d.run(p, pos(a2), n - 1)?;
                d.arc(y1, p[0])?;
                d.arc(p[n - 1], y2)?;
            }
            CaseTag::ReturnWithRun => {
                let b2 = r.first_landing();
                let c2 = r.second_jump_tail().expect("two jumps");
                d.run(p, 0, pos(b2))?;
                for (t, h) in r.arcs().skip(r.index_of(c2)) {
                    d.arc(t, h)?;
                }
                d.reversed_run(p, pos(b2), pos(a2))?;
                d.arc(b2, a2)?;
                d.run(p, pos(a2), n - 1)?;
                d.arc(y1, p[0])?;
                d.arc(p[n - 1], y2)?;
            }
            CaseTag::ReturnTwoJumps => {
                let b1 = r.last_jump_tail();
                let c1 = r.last_run_start().expect("two jumps");
                d.run(p, 0, pos(a1))?;
                d.reversed_run(p, pos(a1), pos(b1))?;
                d.arc(a1, b1)?;
                for (t, h) in r.arcs().take(r.index_of(c1)) {
                    d.arc(t, h)?;
                }
                d.run(p, pos(b1), n - 1)?;
                d.arc(y1, p[0])?;
                d.arc(p[n - 1], y2)?;
            }
            CaseTag::Overlap => {
                return Err(Error::Argument("return path tagged as overlap".into()));
            }
        }
        r.case
    };

    let (orientation, mandated) = d.finish(o)?;
    verify_bound(&orientation, n - 2)?;
    Ok(CaseOrientation {
        orientation,
        case,
        mandated,
        spares,
    })
}

/// The sub-orientation formed by the mandated arcs only, on all `n` vertices.
pub fn mandated_suborientation(c: &CaseOrientation) -> Result<Orientation> {
    let n = c.orientation.order();
    let g = UndirectedGraph::new(n, c.mandated.iter().copied())?;
    Orientation::from_arcs(g, c.mandated.iter().copied())
}
