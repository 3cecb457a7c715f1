use crate::budget::{Meter, SearchBudget, SearchOutcome, Step};
use crate::error::{Error, Result, Violation};
use crate::factor::{FactorState, TwoFactorization};
use crate::graph::{regularity, MultiGraph};
use crate::label::Label;
use crate::labeling::EdgeLabeling;
use crate::striation::Striation;

use super::VertexSums;

/// Backtracking search for a striation.
///
/// Factor choice and labeling are interleaved: stria 1 is chosen, its edges
/// are labeled (ascending edge index, ascending labels, one label per residue
/// class in `1..=p`), then stria 2 is chosen from the remaining edges, and so
/// on. Induced-label collisions prune as in
/// [`search_edge_graceful`](super::search_edge_graceful).
pub fn search_striation<L: Label>(
    g: &MultiGraph,
    budget: SearchBudget,
) -> Result<SearchOutcome<Striation<L>>> {
    let r = regularity(g)
        .two_r()
        .ok_or(Error::PreconditionViolated(Violation::NotTwoRRegular))?;
    let modulus = L::from_usize(g.vertex_count())?;
    L::from_usize(g.edge_count())?;
    let meter = Meter::new(budget);
    let sums = VertexSums::new(g).expect("2r-regular graphs have no isolated vertices");
    let p = g.vertex_count();
    let mut labels = Labels {
        meter: &meter,
        sums,
        labels: vec![0; g.edge_count()],
        used: vec![false; g.edge_count() + 1],
        stria_residues: vec![vec![false; p]; r],
        found: None,
    };
    let mut factors = FactorState::new(g, r, &meter);
    let step = stria_level(&mut factors, &mut labels, 0);
    Ok(meter.finish(step, || {
        let (factorization, raw) = labels.found.take().expect("witness recorded");
        let labels = raw
            .into_iter()
            .map(|l| L::from_usize(l).expect("checked q fits"))
            .collect();
        Striation::new(factorization, EdgeLabeling::new(labels, modulus))
    }))
}

fn stria_level(fs: &mut FactorState<'_>, ls: &mut Labels<'_>, j: usize) -> Step {
    if j == fs.r {
        ls.found = Some((fs.snapshot(), ls.labels.clone()));
        return Step::Found;
    }
    fs.next_factor(j, &mut |fs| {
        let g = fs.g;
        let mut edges = fs.factor(j).to_vec();
        edges.sort_unstable();
        ls.label_stria(g, &edges, j, 0, &mut |ls| stria_level(fs, ls, j + 1))
    })
}

struct Labels<'a> {
    meter: &'a Meter,
    sums: VertexSums,
    labels: Vec<usize>,
    used: Vec<bool>,
    /// Residues (`label mod p`) already used inside each stria.
    stria_residues: Vec<Vec<bool>>,
    found: Option<(TwoFactorization, Vec<usize>)>,
}

impl<'a> Labels<'a> {
    fn label_stria(
        &mut self,
        g: &MultiGraph,
        edges: &[usize],
        j: usize,
        at: usize,
        cont: &mut dyn FnMut(&mut Labels<'a>) -> Step,
    ) -> Step {
        let Some(&edge) = edges.get(at) else {
            return cont(self);
        };
        let q = self.labels.len();
        let p = self.sums.p;
        let (u, v) = g.endpoints(edge);
        for label in 1..=q {
            if self.used[label] || self.stria_residues[j][label % p] {
                continue;
            }
            if !self.meter.tick() {
                return Step::OutOfBudget;
            }
            if !self.sums.apply(u, v, label) {
                continue;
            }
            self.used[label] = true;
            self.stria_residues[j][label % p] = true;
            self.labels[edge] = label;
            let step = self.label_stria(g, edges, j, at + 1, cont);
            if step != Step::Continue {
                return step;
            }
            self.labels[edge] = 0;
            self.stria_residues[j][label % p] = false;
            self.used[label] = false;
            self.sums.retract(u, v, label);
        }
        Step::Continue
    }
}
