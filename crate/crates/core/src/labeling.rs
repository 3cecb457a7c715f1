//! Edge labelings, induced vertex labels and the edge-graceful check.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::MultiGraph;
use crate::label::{add_mod, Label};
use crate::text::{content_lines, parse_error, parse_pair};

/// Labels on the edges of a graph together with the modulus the induced
/// vertex labels are reduced by.
///
/// `labels[e]` is the label of edge `e`. The container does not enforce the
/// bijection onto `1..=q`; [`EdgeLabeling::defect`] reports violations and
/// every consumer checks it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeLabeling<L> {
    labels: Vec<L>,
    modulus: L,
}

/// Why a label sequence is not a bijection onto `1..=q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelDefect<L> {
    OutOfRange {
        edge: usize,
        label: L,
    },
    Repeated {
        label: L,
        first_edge: usize,
        second_edge: usize,
    },
}

impl<L: Label> fmt::Display for LabelDefect<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            LabelDefect::OutOfRange { edge, label } => {
                write!(f, "edge {} has label {label} outside 1..=q", edge + 1)
            }
            LabelDefect::Repeated {
                label,
                first_edge,
                second_edge,
            } => write!(
                f,
                "label {label} is used by edges {} and {}",
                first_edge + 1,
                second_edge + 1
            ),
        }
    }
}

impl<L: Label> EdgeLabeling<L> {
    pub fn new(labels: Vec<L>, modulus: L) -> Self {
        Self { labels, modulus }
    }

    /// Labeling paired with `g`: modulus set to `g`'s vertex count.
    pub fn for_graph(g: &MultiGraph, labels: Vec<L>) -> Result<Self> {
        Ok(Self::new(labels, L::from_usize(g.vertex_count())?))
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn label(&self, edge: usize) -> L {
        self.labels[edge]
    }

    pub fn modulus(&self) -> L {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// First bijection violation in edge order, if any.
    pub fn defect(&self) -> Option<LabelDefect<L>> {
        let q = self.labels.len();
        let mut owner: Vec<Option<usize>> = vec![None; q];
        for (edge, &label) in self.labels.iter().enumerate() {
            let slot = label
                .to_usize()
                .filter(|&l| (1..=q).contains(&l))
                .map(|l| l - 1);
            let Some(slot) = slot else {
                return Some(LabelDefect::OutOfRange { edge, label });
            };
            if let Some(first_edge) = owner[slot] {
                return Some(LabelDefect::Repeated {
                    label,
                    first_edge,
                    second_edge: edge,
                });
            }
            owner[slot] = Some(edge);
        }
        None
    }

    pub fn is_bijective(&self) -> bool {
        self.defect().is_none()
    }

    /// Fails with [`Error::ShapeMismatch`] unless this labeling has one label
    /// per edge of `g` and modulus equal to `g`'s vertex count.
    pub fn check_pairs_with(&self, g: &MultiGraph) -> Result<()> {
        if self.labels.len() != g.edge_count() {
            return Err(Error::ShapeMismatch(format!(
                "labeling has {} labels but the graph has {} edges",
                self.labels.len(),
                g.edge_count()
            )));
        }
        if self.modulus.to_usize() != Some(g.vertex_count()) {
            return Err(Error::ShapeMismatch(format!(
                "labeling modulus {} differs from vertex count {}",
                self.modulus,
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// Canonical text form: one `edge_index label` line per edge, edge
    /// indices 1-based and ascending.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (e, label) in self.labels.iter().enumerate() {
            out.push_str(&format!("{} {label}\n", e + 1));
        }
        out
    }

    /// Parses the text form. The file does not carry the modulus, so the
    /// caller supplies it (normally the vertex count of the paired graph).
    pub fn from_text(text: &str, modulus: L) -> Result<Self> {
        let labels = parse_indexed_lines(content_lines(text))?;
        Ok(Self::new(labels, modulus))
    }
}

/// Parses `index value` lines whose indices must run `1, 2, 3, ...`.
pub(crate) fn parse_indexed_lines<'a, V: std::str::FromStr>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<V>> {
    let mut values = Vec::new();
    for (line, body) in lines {
        let (index, value): (usize, V) = parse_pair(line, body)?;
        if index != values.len() + 1 {
            return Err(parse_error(
                line,
                format!("expected edge index {}, found {index}", values.len() + 1),
            ));
        }
        values.push(value);
    }
    Ok(values)
}

/// Induced vertex labels: `values[v]` is the sum of the labels on the edges
/// at `v`, reduced to `0..p`. Parallel edges count separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InducedLabels<L> {
    pub values: Vec<L>,
}

impl<L: Label> InducedLabels<L> {
    /// First pair `u < v` (ordered by `v`, then `u`) with equal values.
    pub fn first_collision(&self, modulus: L) -> Option<(usize, usize)> {
        let mut seen: Vec<Option<usize>> = vec![None; modulus.to_index()];
        for (v, value) in self.values.iter().enumerate() {
            let slot = &mut seen[value.to_index()];
            if let Some(u) = *slot {
                return Some((u, v));
            }
            *slot = Some(v);
        }
        None
    }
}

/// Induced labels of `g` under `labeling`, reduced modulo the labeling's
/// modulus.
pub fn induced_vertex_labels<L: Label>(
    g: &MultiGraph,
    labeling: &EdgeLabeling<L>,
) -> Result<InducedLabels<L>> {
    labeling.check_pairs_with(g)?;
    if let Some(defect) = labeling.defect() {
        return Err(Error::InvalidLabeling(defect.to_string()));
    }
    Ok(induced_unchecked(g, labeling.labels(), labeling.modulus()))
}

pub(crate) fn induced_unchecked<L: Label>(
    g: &MultiGraph,
    labels: &[L],
    modulus: L,
) -> InducedLabels<L> {
    let values = (0..g.vertex_count())
        .map(|v| {
            g.incident_edges(v).iter().fold(L::zero(), |acc, &e| {
                add_mod(acc, labels[e] % modulus, modulus)
            })
        })
        .collect();
    InducedLabels { values }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GracefulVerdict<L> {
    Valid,
    /// Vertices `u < v` share the induced label `residue`.
    Duplicate {
        u: usize,
        v: usize,
        residue: L,
    },
    InvalidLabeling(LabelDefect<L>),
}

impl<L> GracefulVerdict<L> {
    pub fn is_valid(&self) -> bool {
        matches!(self, GracefulVerdict::Valid)
    }
}

impl<L: Label> fmt::Display for GracefulVerdict<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GracefulVerdict::Valid => write!(f, "valid"),
            GracefulVerdict::Duplicate { u, v, residue } => write!(
                f,
                "duplicate: vertices {u} and {v} both have induced label {residue}"
            ),
            GracefulVerdict::InvalidLabeling(defect) => write!(f, "invalid labeling: {defect}"),
        }
    }
}

/// Checks that the induced labels of `g` are pairwise distinct, i.e. a
/// permutation of `0..p`.
///
/// Shape mismatches are errors; a non-bijective labeling is a verdict.
pub fn verify_edge_graceful<L: Label>(
    g: &MultiGraph,
    labeling: &EdgeLabeling<L>,
) -> Result<GracefulVerdict<L>> {
    labeling.check_pairs_with(g)?;
    if let Some(defect) = labeling.defect() {
        return Ok(GracefulVerdict::InvalidLabeling(defect));
    }
    let induced = induced_unchecked(g, labeling.labels(), labeling.modulus());
    Ok(match induced.first_collision(labeling.modulus()) {
        None => GracefulVerdict::Valid,
        Some((u, v)) => GracefulVerdict::Duplicate {
            u,
            v,
            residue: induced.values[v],
        },
    })
}
