//! 2-factorizations of 2r-regular multigraphs.

use std::fmt;

use crate::budget::{Meter, SearchBudget, SearchOutcome, Step};
use crate::error::{Error, Result, Violation};
use crate::graph::{regularity, MultiGraph};

/// A partition of the edge set into `r` spanning 2-regular subgraphs.
///
/// Each factor lists its edge indices in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoFactorization {
    factors: Vec<Vec<usize>>,
}

/// First reason a candidate factorization is rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorizationDefect {
    NotTwoRRegular,
    FactorCount {
        expected: usize,
        found: usize,
    },
    EdgeOutOfRange {
        factor: usize,
        edge: usize,
    },
    EdgeRepeated {
        edge: usize,
    },
    EdgeMissing {
        edge: usize,
    },
    FactorSize {
        factor: usize,
        size: usize,
        expected: usize,
    },
    VertexDegree {
        factor: usize,
        vertex: usize,
        degree: usize,
    },
}

impl fmt::Display for FactorizationDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FactorizationDefect::*;
        // Factor and edge numbers are shown 1-based, as in the file formats.
        match *self {
            NotTwoRRegular => write!(f, "graph is not 2r-regular"),
            FactorCount { expected, found } => {
                write!(f, "expected {expected} factors, found {found}")
            }
            EdgeOutOfRange { factor, edge } => {
                write!(
                    f,
                    "factor {} names edge {} which does not exist",
                    factor + 1,
                    edge + 1
                )
            }
            EdgeRepeated { edge } => write!(f, "edge {} appears more than once", edge + 1),
            EdgeMissing { edge } => write!(f, "edge {} is in no factor", edge + 1),
            FactorSize {
                factor,
                size,
                expected,
            } => write!(
                f,
                "factor {} has {size} edges, expected {expected}",
                factor + 1
            ),
            VertexDegree {
                factor,
                vertex,
                degree,
            } => write!(
                f,
                "vertex {vertex} has degree {degree} in factor {}, expected 2",
                factor + 1
            ),
        }
    }
}

impl TwoFactorization {
    /// Wraps factor edge lists without validating them; see
    /// [`TwoFactorization::validate`].
    pub fn new(mut factors: Vec<Vec<usize>>) -> Self {
        for factor in &mut factors {
            factor.sort_unstable();
        }
        Self { factors }
    }

    pub fn factors(&self) -> &[Vec<usize>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factor index of every edge, or `None` for edges in no factor.
    pub fn factor_of_edges(&self, edge_count: usize) -> Vec<Option<usize>> {
        let mut owner = vec![None; edge_count];
        for (j, factor) in self.factors.iter().enumerate() {
            for &e in factor {
                if e < edge_count {
                    owner[e] = Some(j);
                }
            }
        }
        owner
    }

    pub fn validate(&self, g: &MultiGraph) -> Result<(), FactorizationDefect> {
        let Some(r) = regularity(g).two_r() else {
            return Err(FactorizationDefect::NotTwoRRegular);
        };
        if self.factors.len() != r {
            return Err(FactorizationDefect::FactorCount {
                expected: r,
                found: self.factors.len(),
            });
        }
        let p = g.vertex_count();
        let mut seen = vec![false; g.edge_count()];
        for (j, factor) in self.factors.iter().enumerate() {
            let mut degree = vec![0usize; p];
            for &e in factor {
                if e >= g.edge_count() {
                    return Err(FactorizationDefect::EdgeOutOfRange { factor: j, edge: e });
                }
                if std::mem::replace(&mut seen[e], true) {
                    return Err(FactorizationDefect::EdgeRepeated { edge: e });
                }
                let (u, v) = g.endpoints(e);
                degree[u] += 1;
                degree[v] += 1;
            }
            if factor.len() != p {
                return Err(FactorizationDefect::FactorSize {
                    factor: j,
                    size: factor.len(),
                    expected: p,
                });
            }
            if let Some(vertex) = (0..p).find(|&v| degree[v] != 2) {
                return Err(FactorizationDefect::VertexDegree {
                    factor: j,
                    vertex,
                    degree: degree[vertex],
                });
            }
        }
        if let Some(edge) = seen.iter().position(|&s| !s) {
            return Err(FactorizationDefect::EdgeMissing { edge });
        }
        Ok(())
    }
}

/// Finds the first 2-factorization under the fixed search order: factors are
/// peeled one at a time, each grown from the lowest vertex still short of
/// degree 2 using its incident edges in index order.
pub fn two_factorize(
    g: &MultiGraph,
    budget: SearchBudget,
) -> Result<SearchOutcome<TwoFactorization>> {
    let r = regularity(g)
        .two_r()
        .ok_or(Error::PreconditionViolated(Violation::NotTwoRRegular))?;
    let meter = Meter::new(budget);
    let mut state = FactorState::new(g, r, &meter);
    let mut found = None;
    let step = factorize_from(&mut state, 0, &mut |fs: &mut FactorState<'_>| {
        found = Some(fs.snapshot());
        Step::Found
    });
    Ok(meter.finish(step, || found.expect("witness recorded")))
}

/// Enumerates factorizations by continuation: `on_complete` runs once per
/// complete factorization, in search order, and stops the walk by returning
/// anything but [`Step::Continue`].
pub(crate) fn factorize_from(
    fs: &mut FactorState<'_>,
    j: usize,
    on_complete: &mut dyn FnMut(&mut FactorState<'_>) -> Step,
) -> Step {
    if j == fs.r {
        return on_complete(fs);
    }
    fs.next_factor(j, &mut |fs| factorize_from(fs, j + 1, on_complete))
}

/// Mutable search state for peeling 2-factors off a 2r-regular graph.
pub(crate) struct FactorState<'a> {
    pub(crate) g: &'a MultiGraph,
    pub(crate) r: usize,
    pub(crate) meter: &'a Meter,
    owner: Vec<Option<usize>>,
    factors: Vec<Vec<usize>>,
    degree: Vec<u8>,
}

impl<'a> FactorState<'a> {
    pub(crate) fn new(g: &'a MultiGraph, r: usize, meter: &'a Meter) -> Self {
        Self {
            g,
            r,
            meter,
            owner: vec![None; g.edge_count()],
            factors: vec![Vec::new(); r],
            degree: vec![0; g.vertex_count()],
        }
    }

    /// Edges of factor `j` in the order they were chosen.
    pub(crate) fn factor(&self, j: usize) -> &[usize] {
        &self.factors[j]
    }

    pub(crate) fn snapshot(&self) -> TwoFactorization {
        TwoFactorization::new(self.factors.clone())
    }

    /// Produces each candidate for factor `j` in turn and calls `cont` on it.
    /// The last factor is forced: it is whatever edges remain.
    pub(crate) fn next_factor(
        &mut self,
        j: usize,
        cont: &mut dyn FnMut(&mut FactorState<'a>) -> Step,
    ) -> Step {
        if j + 1 < self.r {
            return self.build_factor(j, cont);
        }
        if !self.meter.tick() {
            return Step::OutOfBudget;
        }
        self.take_rest(j);
        let step = cont(self);
        self.release(j);
        step
    }

    /// Grows factor `j` until every vertex has degree 2 in it, calling `cont`
    /// for each completion.
    fn build_factor(
        &mut self,
        j: usize,
        cont: &mut dyn FnMut(&mut FactorState<'a>) -> Step,
    ) -> Step {
        self.degree.iter_mut().for_each(|d| *d = 0);
        self.extend(j, usize::MAX, 0, cont)
    }

    fn extend(
        &mut self,
        j: usize,
        prev_vertex: usize,
        prev_next_edge: usize,
        cont: &mut dyn FnMut(&mut FactorState<'a>) -> Step,
    ) -> Step {
        let Some(v) = self.degree.iter().position(|&d| d < 2) else {
            let saved = self.degree.clone();
            let step = cont(self);
            self.degree = saved;
            return step;
        };
        // Edges at one vertex are taken as an increasing combination so each
        // factor is generated once.
        let min_edge = if v == prev_vertex { prev_next_edge } else { 0 };
        let g = self.g;
        for &e in g.incident_edges(v) {
            if e < min_edge || self.owner[e].is_some() {
                continue;
            }
            let w = g.opposite(e, v);
            if self.degree[w] >= 2 {
                continue;
            }
            if !self.meter.tick() {
                return Step::OutOfBudget;
            }
            self.owner[e] = Some(j);
            self.factors[j].push(e);
            self.degree[v] += 1;
            self.degree[w] += 1;
            let step = self.extend(j, v, e + 1, cont);
            self.degree[v] -= 1;
            self.degree[w] -= 1;
            self.factors[j].pop();
            self.owner[e] = None;
            if step != Step::Continue {
                return step;
            }
        }
        Step::Continue
    }

    /// Puts every unassigned edge into factor `j`. In a 2r-regular graph
    /// whose first `r - 1` factors are 2-factors this is again a 2-factor.
    fn take_rest(&mut self, j: usize) {
        for e in 0..self.owner.len() {
            if self.owner[e].is_none() {
                self.owner[e] = Some(j);
                self.factors[j].push(e);
            }
        }
    }

    fn release(&mut self, j: usize) {
        for e in self.factors[j].drain(..) {
            self.owner[e] = None;
        }
    }
}
