//! Plain-text edge and arc lists, plus a graph6 reader.
//!
//! Both list formats are a header line `n m` followed by `m` lines `u v`;
//! blank lines and lines starting with `#` are ignored. In an arc list each
//! line `u v` means the arc `u -> v`. Serialization sorts lines so output is
//! byte-stable.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{normalize, Edge, Orientation, UndirectedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Header and pair lines, with 1-based line numbers.
fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, Edge)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let two_numbers = |line: usize, s: &str| -> Result<(usize, usize)> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let [a, b] = fields.as_slice() else {
            return Err(parse_err(
                line,
                format!("expected two integers, got {:?}", s),
            ));
        };
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(line, format!("not a vertex number: {t:?}")))
        };
        Ok((num(a)?, num(b)?))
    };
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header \"n m\""))?;
    let (n, m) = two_numbers(header_line, header)?;
    let mut pairs = Vec::with_capacity(m);
    let mut last_line = header_line;
    for (line, s) in lines {
        let (u, v) = two_numbers(line, s)?;
        if u >= n || v >= n {
            return Err(parse_err(
                line,
                format!("vertex out of range 0..{n}: {u} {v}"),
            ));
        }
        if u == v {
            return Err(parse_err(line, format!("loop at vertex {u}")));
        }
        pairs.push((line, (u, v)));
        last_line = line;
    }
    if pairs.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} lines, found {}", pairs.len()),
        ));
    }
    let mut seen = BTreeSet::new();
    for &(line, (u, v)) in &pairs {
        if !seen.insert(normalize(u, v)) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
    }
    Ok((n, pairs))
}

pub fn parse_edge_list(text: &str) -> Result<UndirectedGraph> {
    let (n, pairs) = parse_pairs(text)?;
    UndirectedGraph::new(n, pairs.into_iter().map(|(_, e)| e))
}

pub fn parse_arc_list(text: &str) -> Result<Orientation> {
    let (n, pairs) = parse_pairs(text)?;
    let arcs: Vec<Edge> = pairs.into_iter().map(|(_, a)| a).collect();
    let g = UndirectedGraph::new(n, arcs.iter().copied())?;
    Orientation::from_arcs(g, arcs)
}

fn write_pairs(n: usize, pairs: impl Iterator<Item = Edge>) -> String {
    let mut sorted: Vec<Edge> = pairs.collect();
    sorted.sort_unstable();
    let mut out = format!("{n} {}\n", sorted.len());
    for (u, v) in sorted {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Edge list with `u < v` on each line, lines sorted.
pub fn serialize_edge_list(g: &UndirectedGraph) -> String {
    write_pairs(g.order(), g.edges().iter().copied())
}

/// Arc list, lines sorted by (tail, head).
pub fn serialize_arc_list(o: &Orientation) -> String {
    write_pairs(o.order(), o.arcs())
}

/// Decodes one graph6 line (orders below 258048 only).
pub fn parse_graph6(text: &str) -> Result<UndirectedGraph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes: Vec<u8> = s.bytes().collect();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("byte {b} outside the graph6 range")));
    }
    let six = |i: usize| usize::from(bytes[i] - 63);
    let (n, start) = if bytes[0] != 126 {
        (six(0), 1)
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        (six(1) << 12 | six(2) << 6 | six(3), 4)
    } else {
        return Err(parse_err(
            1,
            "graph6 orders of 258048 or more are not supported",
        ));
    };
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() - start != needed {
        return Err(parse_err(
            1,
            format!(
                "graph6 body has {} bytes, order {n} needs {needed}",
                bytes.len() - start
            ),
        ));
    }
    let bit = |k: usize| six(start + k / 6) >> (5 - k % 6) & 1 == 1;
    // column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    UndirectedGraph::new(n, edges)
}
