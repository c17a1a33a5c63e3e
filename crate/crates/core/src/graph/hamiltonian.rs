use super::UndirectedGraph;

/// Outcome of a budgeted Hamiltonian cycle search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HamiltonianSearch {
    /// Vertex sequence of a Hamiltonian cycle, starting at vertex 0.
    Found(Vec<usize>),
    /// The search space was exhausted without finding a cycle.
    NoCycle,
    /// The node budget ran out first.
    BudgetExhausted,
}

impl HamiltonianSearch {
    pub fn cycle(&self) -> Option<&[usize]> {
        match self {
            HamiltonianSearch::Found(c) => Some(c),
            _ => None,
        }
    }
}

struct Search<'a> {
    g: &'a UndirectedGraph,
    /// For each vertex, the neighbors it is forced to use (degree-2 vertices
    /// force both incident edges).
    forced: Vec<Vec<usize>>,
    on_path: Vec<bool>,
    path: Vec<usize>,
    budget: u64,
    expanded: u64,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl Search<'_> {
    fn extend(&mut self) -> Step {
        if self.expanded >= self.budget {
            return Step::OutOfBudget;
        }
        self.expanded += 1;
        let n = self.g.order();
        let end = *self.path.last().expect("path starts non-empty");
        let start = self.path[0];
        if self.path.len() == n {
            return if self.g.has_edge(end, start) && self.closing_respects_forced(end, start) {
                Step::Done
            } else {
                Step::Dead
            };
        }
        if !self.remaining_viable(end, start) {
            return Step::Dead;
        }
        let prev = (self.path.len() >= 2).then(|| self.path[self.path.len() - 2]);
        let pending: Vec<usize> = self.forced[end]
            .iter()
            .copied()
            .filter(|&w| Some(w) != prev)
            .collect();
        let candidates: Vec<usize> = match pending.as_slice() {
            [] => self.g.neighbors(end).to_vec(),
            [w] => vec![*w],
            // at the start vertex the second forced edge becomes the closing edge
            [_, _] if prev.is_none() => pending,
            _ => return Step::Dead,
        };
        for w in candidates {
            if self.on_path[w] {
                continue;
            }
            self.on_path[w] = true;
            self.path.push(w);
            match self.extend() {
                Step::Dead => {}
                other => return other,
            }
            self.path.pop();
            self.on_path[w] = false;
        }
        Step::Dead
    }

    /// The closing edge `end-start` must not skip a forced edge at either end.
    fn closing_respects_forced(&self, end: usize, start: usize) -> bool {
        let n = self.path.len();
        let ok = |v: usize, a: usize, b: usize| self.forced[v].iter().all(|&w| w == a || w == b);
        ok(end, self.path[n - 2], start) && ok(start, self.path[1], end)
    }

    /// Every unvisited vertex still needs two usable neighbors.
    fn remaining_viable(&self, end: usize, start: usize) -> bool {
        (0..self.g.order()).filter(|&v| !self.on_path[v]).all(|v| {
            let usable = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&&w| !self.on_path[w] || w == end || w == start)
                .count();
            usable >= 2
        })
    }
}

/// Backtracking search for a Hamiltonian cycle with degree-2 forced-edge
/// pruning. At most `node_budget` search nodes are expanded.
pub fn find_hamiltonian_cycle(g: &UndirectedGraph, node_budget: u64) -> HamiltonianSearch {
    let n = g.order();
    if n < 3 || (0..n).any(|v| g.degree(v) < 2) {
        return HamiltonianSearch::NoCycle;
    }
    let mut forced = vec![Vec::new(); n];
    for v in 0..n {
        if g.degree(v) == 2 {
            for &w in g.neighbors(v) {
                if !forced[v].contains(&w) {
                    forced[v].push(w);
                }
                if !forced[w].contains(&v) {
                    forced[w].push(v);
                }
            }
        }
    }
    if forced.iter().any(|f| f.len() > 2) {
        return HamiltonianSearch::NoCycle;
    }
    let mut search = Search {
        g,
        forced,
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
        budget: node_budget,
        expanded: 0,
    };
    search.on_path[0] = true;
    search.path.push(0);
    match search.extend() {
        Step::Done => HamiltonianSearch::Found(search.path),
        Step::Dead => HamiltonianSearch::NoCycle,
        Step::OutOfBudget => HamiltonianSearch::BudgetExhausted,
    }
}
