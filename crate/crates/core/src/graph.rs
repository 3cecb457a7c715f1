//! Loop-free multigraphs and the generators for the families used by the
//! lifting constructions.
//!
//! Edges are identified by position. Parallel edges share an endpoint pair,
//! so a pair never names an edge on its own. In the Rust API edge and vertex
//! indices are 0-based; the text formats write edge indices 1-based.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{content_lines, parse_error, parse_pair};

/// A `(p, q)` multigraph: `p` vertices, `q` edges, parallel edges allowed,
/// loops forbidden.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl MultiGraph {
    /// Builds a graph from an ordered edge list. Edge `i` of the result is
    /// `edges[i]`.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::DegenerateInput(
                "graph needs at least one vertex".into(),
            ));
        }
        let mut incidence = vec![Vec::new(); vertex_count];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::DegenerateInput(format!(
                    "edge {e} = ({u}, {v}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::DegenerateInput(format!(
                    "edge {e} is a loop at vertex {u}"
                )));
            }
            incidence[u].push(e);
            incidence[v].push(e);
        }
        Ok(Self {
            vertex_count,
            edges,
            incidence,
        })
    }

    /// `p`.
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// `q`.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    /// Edges incident to `vertex` in ascending index order.
    pub fn incident_edges(&self, vertex: usize) -> &[usize] {
        &self.incidence[vertex]
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.incidence[vertex].len()
    }

    /// The endpoint of `edge` that is not `vertex`.
    pub fn opposite(&self, edge: usize, vertex: usize) -> usize {
        let (u, v) = self.edges[edge];
        if u == vertex {
            v
        } else {
            u
        }
    }

    /// Canonical text form: `p q` then one `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (header_line, header) = lines
            .next()
            .ok_or_else(|| parse_error(0, "empty graph file"))?;
        let (p, q): (usize, usize) = parse_pair(header_line, header)?;
        let mut edges = Vec::with_capacity(q);
        let mut last_line = header_line;
        for (line, body) in lines {
            if edges.len() == q {
                return Err(parse_error(line, format!("more than {q} edge lines")));
            }
            let (u, v): (usize, usize) = parse_pair(line, body)?;
            if u >= p || v >= p {
                return Err(parse_error(line, format!("vertex out of range 0..{p}")));
            }
            if u == v {
                return Err(parse_error(line, "loops are not allowed"));
            }
            edges.push((u, v));
            last_line = line;
        }
        if edges.len() != q {
            return Err(parse_error(
                last_line,
                format!("expected {q} edge lines, found {}", edges.len()),
            ));
        }
        MultiGraph::new(p, edges).map_err(|e| parse_error(header_line, e.to_string()))
    }
}

impl fmt::Display for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for MultiGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}

/// Degree summary of a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularityInfo {
    pub is_regular: bool,
    /// Common degree, when regular.
    pub degree: Option<usize>,
    /// Half the common degree, when regular of even degree.
    pub r: Option<usize>,
}

impl RegularityInfo {
    /// `Some(r)` when the graph is 2r-regular with `r >= 1`.
    pub fn two_r(&self) -> Option<usize> {
        self.r.filter(|&r| r >= 1)
    }
}

pub fn regularity(g: &MultiGraph) -> RegularityInfo {
    let first = g.degree(0);
    if (1..g.vertex_count()).all(|v| g.degree(v) == first) {
        RegularityInfo {
            is_regular: true,
            degree: Some(first),
            r: first.is_multiple_of(2).then_some(first / 2),
        }
    } else {
        RegularityInfo {
            is_regular: false,
            degree: None,
            r: None,
        }
    }
}

/// The cycle `C_n` with edges `(i, i+1 mod n)`.
pub fn cycle(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::DegenerateInput(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    MultiGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// The cycle power `C_n^k`: every pair at cycle distance `1..=min(k, n/2)`
/// joined by one edge.
///
/// Edges are ordered by distance, then by start vertex `i` of the pair
/// `(i, i + d mod n)`, so `cycle_power(n, 1) == cycle(n)`. For even `n` the
/// antipodal pairs get a single edge each.
pub fn cycle_power(n: usize, k: usize) -> Result<MultiGraph> {
    if n < 3 {
        return Err(Error::DegenerateInput(format!(
            "cycle power needs n >= 3, got {n}"
        )));
    }
    if k == 0 {
        return Err(Error::DegenerateInput("cycle power needs k >= 1".into()));
    }
    let max_distance = k.min(n / 2);
    let mut edges = Vec::new();
    for d in 1..=max_distance {
        let starts = if 2 * d == n { n / 2 } else { n };
        edges.extend((0..starts).map(|i| (i, (i + d) % n)));
    }
    MultiGraph::new(n, edges)
}

/// Complete graph `K_n`, generated as `C_n^{floor(n/2)}`.
pub fn complete(n: usize) -> Result<MultiGraph> {
    cycle_power(n, n / 2)
}

/// Cartesian product `G □ H`.
///
/// Vertex `(a, b)` has index `a * p_h + b`. All copies of `G` edges come
/// first (by `b`, then `G` edge index), then all copies of `H` edges (by `a`,
/// then `H` edge index).
pub fn cartesian_product(g: &MultiGraph, h: &MultiGraph) -> Result<MultiGraph> {
    let ph = h.vertex_count();
    let vertex_count = g
        .vertex_count()
        .checked_mul(ph)
        .ok_or_else(|| Error::DegenerateInput("product vertex count overflows".into()))?;
    let mut edges = Vec::with_capacity(g.edge_count() * ph + h.edge_count() * g.vertex_count());
    for b in 0..ph {
        edges.extend(g.edges().iter().map(|&(u, v)| (u * ph + b, v * ph + b)));
    }
    for a in 0..g.vertex_count() {
        edges.extend(h.edges().iter().map(|&(x, y)| (a * ph + x, a * ph + y)));
    }
    MultiGraph::new(vertex_count, edges)
}

/// Index arithmetic for the disjoint union `kG`, with copies numbered from 0.
///
/// Vertex `v` of copy `c` is `c * p + v`, edge `e` of copy `c` is `c * q + e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnionIndex {
    pub copies: usize,
    pub p: usize,
    pub q: usize,
}

impl UnionIndex {
    pub fn new(g: &MultiGraph, copies: usize) -> Self {
        Self {
            copies,
            p: g.vertex_count(),
            q: g.edge_count(),
        }
    }

    pub fn vertex(&self, copy: usize, v: usize) -> usize {
        copy * self.p + v
    }

    pub fn edge(&self, copy: usize, e: usize) -> usize {
        copy * self.q + e
    }

    /// Inverse of [`UnionIndex::vertex`]: `(copy, v)`.
    pub fn split_vertex(&self, index: usize) -> (usize, usize) {
        (index / self.p, index % self.p)
    }

    /// Inverse of [`UnionIndex::edge`]: `(copy, e)`.
    pub fn split_edge(&self, index: usize) -> (usize, usize) {
        (index / self.q, index % self.q)
    }
}

/// `kG`: `k` vertex-disjoint copies of `g`, laid out copy-major.
pub fn disjoint_union(g: &MultiGraph, k: usize) -> Result<MultiGraph> {
    if k == 0 {
        return Err(Error::DegenerateInput("disjoint union needs k >= 1".into()));
    }
    let index = UnionIndex::new(g, k);
    let mut edges = Vec::with_capacity(k * g.edge_count());
    for c in 0..k {
        edges.extend(
            g.edges()
                .iter()
                .map(|&(u, v)| (index.vertex(c, u), index.vertex(c, v))),
        );
    }
    MultiGraph::new(k * g.vertex_count(), edges)
}
