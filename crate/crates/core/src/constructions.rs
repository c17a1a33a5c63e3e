//! Extremal graphs with one edge fewer than the size threshold and no
//! orientation of the target diameter.
//!
//! Vertex numbering: the path (or cycle) vertices `u_1, u_2, ...` are
//! `0, 1, ...`; clique vertices follow; the extra degree-3 vertex attached to
//! `u_2, u_3, u_4` is always the last vertex `n - 1`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::UndirectedGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Path `u_1..u_d` whose ends are joined to a clique on `n - d - 1`
    /// vertices, plus a vertex adjacent to `u_2, u_3, u_4`.
    Gnd,
    /// Cycle `u_1..u_{n-1}` plus a vertex adjacent to `u_2, u_3, u_4`.
    H,
}

/// Landmarks of a generated extremal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub family: Family,
    pub n: usize,
    /// Diameter bound the graph fails to meet.
    pub d: usize,
    /// `u_1, u_2, ...` in order: `d` path vertices for `Gnd`, the `n - 1`
    /// cycle vertices for `H`.
    pub spine: Vec<usize>,
    pub clique: Vec<usize>,
    /// The extra vertex adjacent to `u_2, u_3, u_4`.
    pub apex: usize,
}

fn binomial2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

fn check_range(family: Family, n: usize, d: usize) -> Result<()> {
    match family {
        Family::Gnd if d < 5 || d + 2 > n => Err(Error::Range(format!(
            "G(n,d) needs 5 <= d <= n-2, got n={n}, d={d}"
        ))),
        Family::H if n < 5 => Err(Error::Range(format!("H(n) needs n >= 5, got n={n}"))),
        Family::H if d + 2 != n => Err(Error::Range(format!(
            "H(n) has bound d = n-2 = {}, got d={d}",
            n - 2
        ))),
        _ => Ok(()),
    }
}

/// Closed-form edge count: `C(n-d, 2) + n + 1` for `Gnd`, `n + 2` for `H`.
pub fn expected_size(family: Family, n: usize, d: usize) -> Result<usize> {
    check_range(family, n, d)?;
    Ok(match family {
        Family::Gnd => binomial2(n - d) + n + 1,
        Family::H => n + 2,
    })
}

pub fn build_gnd(n: usize, d: usize) -> Result<(UndirectedGraph, ExtremalSpec)> {
    check_range(Family::Gnd, n, d)?;
    let spine: Vec<usize> = (0..d).collect();
    let clique: Vec<usize> = (d..n - 1).collect();
    let apex = n - 1;
    let mut edges: Vec<(usize, usize)> = spine.windows(2).map(|w| (w[0], w[1])).collect();
    for (i, &a) in clique.iter().enumerate() {
        edges.extend(clique[i + 1..].iter().map(|&b| (a, b)));
        edges.push((spine[0], a));
        edges.push((spine[d - 1], a));
    }
    edges.extend([1, 2, 3].map(|i| (spine[i], apex)));
    let g = UndirectedGraph::new(n, edges)?;
    Ok((
        g,
        ExtremalSpec {
            family: Family::Gnd,
            n,
            d,
            spine,
            clique,
            apex,
        },
    ))
}

pub fn build_h(n: usize) -> Result<(UndirectedGraph, ExtremalSpec)> {
    if n < 5 {
        return Err(Error::Range(format!("H(n) needs n >= 5, got n={n}")));
    }
    let spine: Vec<usize> = (0..n - 1).collect();
    let apex = n - 1;
    let mut edges: Vec<(usize, usize)> = (0..n - 1)
        .map(|i| (spine[i], spine[(i + 1) % (n - 1)]))
        .collect();
    edges.extend([1, 2, 3].map(|i| (spine[i], apex)));
    let g = UndirectedGraph::new(n, edges)?;
    Ok((
        g,
        ExtremalSpec {
            family: Family::H,
            n,
            d: n - 2,
            spine,
            clique: Vec::new(),
            apex,
        },
    ))
}

pub fn build(
    family: Family,
    n: usize,
    d: Option<usize>,
) -> Result<(UndirectedGraph, ExtremalSpec)> {
    match family {
        Family::Gnd => {
            let d = d.ok_or_else(|| Error::Argument("G(n,d) needs a bound d".into()))?;
            build_gnd(n, d)
        }
        Family::H => {
            if let Some(d) = d {
                check_range(Family::H, n, d)?;
            }
            build_h(n)
        }
    }
}
