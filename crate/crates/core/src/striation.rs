//! Striations: a 2-factorization paired with an edge-graceful labeling in
//! which the labels of every factor, reduced to `1..=p`, are exactly
//! `{1, ..., p}`.

use std::fmt;

use crate::error::{Error, Result, Violation};
use crate::factor::{FactorizationDefect, TwoFactorization};
use crate::graph::MultiGraph;
use crate::label::Label;
use crate::labeling::{parse_indexed_lines, verify_edge_graceful, EdgeLabeling, GracefulVerdict};
use crate::text::{content_lines, parse_error};

/// Representative of `x mod p` in `1..=p` (so multiples of `p` map to `p`).
pub fn residue_rep<L: Label>(x: L, p: L) -> L {
    let m = x % p;
    if m.is_zero() {
        p
    } else {
        m
    }
}

/// Ordered striæ plus the labeling. Order matters to the lifts, not to
/// validity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Striation<L> {
    pub factorization: TwoFactorization,
    pub labeling: EdgeLabeling<L>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StriationVerdict<L> {
    Valid,
    FactorizationInvalid(FactorizationDefect),
    NotEdgeGraceful(GracefulVerdict<L>),
    /// Stria `stria` (0-based) has no edge whose label reduces to `residue`.
    MissingResidue {
        stria: usize,
        residue: L,
    },
}

impl<L> StriationVerdict<L> {
    pub fn is_valid(&self) -> bool {
        matches!(self, StriationVerdict::Valid)
    }
}

impl<L: Label> fmt::Display for StriationVerdict<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StriationVerdict::Valid => write!(f, "valid"),
            StriationVerdict::FactorizationInvalid(d) => write!(f, "factorization invalid: {d}"),
            StriationVerdict::NotEdgeGraceful(v) => write!(f, "not edge graceful: {v}"),
            StriationVerdict::MissingResidue { stria, residue } => {
                write!(f, "stria {} misses residue {residue}", stria + 1)
            }
        }
    }
}

impl<L: Label> Striation<L> {
    pub fn new(factorization: TwoFactorization, labeling: EdgeLabeling<L>) -> Self {
        Self {
            factorization,
            labeling,
        }
    }

    /// Labeling lines, a `---` separator, then one `edge_index stria_index`
    /// line per edge (both 1-based).
    pub fn to_text(&self) -> String {
        let mut out = self.labeling.to_text();
        out.push_str("---\n");
        let owner = self.factorization.factor_of_edges(self.labeling.len());
        for (e, j) in owner.iter().enumerate() {
            // Edges outside every factor cannot be written; a verified
            // striation has none.
            if let Some(j) = j {
                out.push_str(&format!("{} {}\n", e + 1, j + 1));
            }
        }
        out
    }

    pub fn from_text(text: &str, modulus: L) -> Result<Self> {
        let mut labeling_part = Vec::new();
        let mut factor_part = Vec::new();
        let mut separator = None;
        for (line, body) in content_lines(text) {
            if body == "---" {
                if separator.replace(line).is_some() {
                    return Err(parse_error(line, "second `---` separator"));
                }
            } else if separator.is_none() {
                labeling_part.push((line, body));
            } else {
                factor_part.push((line, body));
            }
        }
        let Some(separator) = separator else {
            return Err(parse_error(0, "missing `---` separator"));
        };
        let labels: Vec<L> = parse_indexed_lines(labeling_part.into_iter())?;
        let stria_of: Vec<usize> = parse_indexed_lines(factor_part.iter().copied())?;
        if stria_of.len() != labels.len() {
            return Err(parse_error(
                separator,
                format!(
                    "{} labels but {} stria assignments",
                    labels.len(),
                    stria_of.len()
                ),
            ));
        }
        let r = stria_of.iter().copied().max().unwrap_or(0);
        let mut factors = vec![Vec::new(); r];
        for (e, (&j, &(line, _))) in stria_of.iter().zip(&factor_part).enumerate() {
            if j == 0 {
                return Err(parse_error(line, "stria indices start at 1"));
            }
            factors[j - 1].push(e);
        }
        Ok(Self::new(
            TwoFactorization::new(factors),
            EdgeLabeling::new(labels, modulus),
        ))
    }
}

/// Checks, in order: the factorization, edge gracefulness of the labeling,
/// then the residue cover of each stria. Reports the first failure.
pub fn verify_striation<L: Label>(g: &MultiGraph, s: &Striation<L>) -> Result<StriationVerdict<L>> {
    s.labeling.check_pairs_with(g)?;
    if let Err(defect) = s.factorization.validate(g) {
        return Ok(StriationVerdict::FactorizationInvalid(defect));
    }
    let graceful = verify_edge_graceful(g, &s.labeling)?;
    if !graceful.is_valid() {
        return Ok(StriationVerdict::NotEdgeGraceful(graceful));
    }
    let p = s.labeling.modulus();
    for (j, factor) in s.factorization.factors().iter().enumerate() {
        let mut present = vec![false; p.to_index() + 1];
        for &e in factor {
            present[residue_rep(s.labeling.label(e), p).to_index()] = true;
        }
        if let Some(m) = (1..present.len()).find(|&m| !present[m]) {
            return Ok(StriationVerdict::MissingResidue {
                stria: j,
                residue: L::from_usize(m)?,
            });
        }
    }
    Ok(StriationVerdict::Valid)
}

/// One edge of a stria: `label = base + multiple * p` with `base` in `1..=p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StriaEntry<L> {
    pub edge: usize,
    pub base: L,
    pub multiple: L,
}

/// Per-stria base labels, rows in stria order, entries in ascending edge
/// index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StriaBases<L> {
    pub p: L,
    pub rows: Vec<Vec<StriaEntry<L>>>,
}

impl<L: Label> StriaBases<L> {
    /// Base labels of stria `j`, a permutation of `1..=p`.
    pub fn row_bases(&self, j: usize) -> Vec<L> {
        self.rows[j].iter().map(|entry| entry.base).collect()
    }
}

pub fn extract_stria_bases<L: Label>(g: &MultiGraph, s: &Striation<L>) -> Result<StriaBases<L>> {
    let verdict = verify_striation(g, s)?;
    if !verdict.is_valid() {
        return Err(Error::PreconditionViolated(Violation::InvalidStriation(
            verdict.to_string(),
        )));
    }
    let p = s.labeling.modulus();
    let rows = s
        .factorization
        .factors()
        .iter()
        .map(|factor| {
            factor
                .iter()
                .map(|&edge| {
                    let label = s.labeling.label(edge);
                    let base = residue_rep(label, p);
                    StriaEntry {
                        edge,
                        base,
                        multiple: (label - base) / p,
                    }
                })
                .collect()
        })
        .collect();
    Ok(StriaBases { p, rows })
}
