use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Orientation;

/// Directed hop distance. `Unreachable` orders after every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// True when finite and at most `bound`.
    pub fn within(self, bound: usize) -> bool {
        matches!(self, Distance::Finite(d) if d <= bound)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("inf"),
        }
    }
}

impl From<usize> for Distance {
    fn from(d: usize) -> Self {
        Distance::Finite(d)
    }
}

pub fn bfs_distances(o: &Orientation, source: usize) -> Vec<Distance> {
    let n = o.order();
    assert!(source < n, "source {source} out of range for order {n}");
    let mut dist = vec![Distance::Unreachable; n];
    let mut queue = VecDeque::with_capacity(n);
    dist[source] = Distance::Finite(0);
    queue.push_back((source, 0));
    while let Some((v, d)) = queue.pop_front() {
        for &w in o.out_neighbors(v) {
            if dist[w] == Distance::Unreachable {
                dist[w] = Distance::Finite(d + 1);
                queue.push_back((w, d + 1));
            }
        }
    }
    dist
}

/// Row `u` holds the distances from `u`.
pub fn all_pairs_distances(o: &Orientation) -> Vec<Vec<Distance>> {
    (0..o.order()).map(|s| bfs_distances(o, s)).collect()
}

pub fn diameter(o: &Orientation) -> Distance {
    (0..o.order())
        .map(|s| {
            bfs_distances(o, s)
                .into_iter()
                .max()
                .unwrap_or(Distance::Finite(0))
        })
        .max()
        .unwrap_or(Distance::Finite(0))
}

pub fn is_strongly_connected(o: &Orientation) -> bool {
    if o.order() <= 1 {
        return true;
    }
    let reach = |forward: bool| {
        let mut seen = vec![false; o.order()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let next = if forward {
                o.out_neighbors(v)
            } else {
                o.in_neighbors(v)
            };
            for &w in next {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    };
    reach(true) && reach(false)
}
