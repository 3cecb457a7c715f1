use crate::budget::{Meter, SearchBudget, SearchOutcome, Step};
use crate::error::Result;
use crate::graph::MultiGraph;
use crate::label::Label;
use crate::labeling::EdgeLabeling;

use super::VertexSums;

/// Backtracking search for an edge-graceful labeling.
///
/// Edges are labeled in index order, labels tried in ascending order, so the
/// first witness is the lexicographically smallest valid label sequence. A
/// branch is cut as soon as a vertex whose edges are all labeled lands on an
/// induced label another finished vertex already has. With an exhaustive
/// budget a `NoneExists` result certifies that no labeling exists.
pub fn search_edge_graceful<L: Label>(
    g: &MultiGraph,
    budget: SearchBudget,
) -> Result<SearchOutcome<EdgeLabeling<L>>> {
    let modulus = L::from_usize(g.vertex_count())?;
    L::from_usize(g.edge_count())?;
    let meter = Meter::new(budget);
    let Some(sums) = VertexSums::new(g) else {
        return Ok(meter.finish(Step::Continue, || unreachable!()));
    };
    let mut search = Search {
        g,
        meter: &meter,
        sums,
        labels: vec![0; g.edge_count()],
        used: vec![false; g.edge_count() + 1],
    };
    let step = search.assign(0);
    Ok(meter.finish(step, || {
        let labels = search
            .labels
            .iter()
            .map(|&l| L::from_usize(l).expect("checked q fits"))
            .collect();
        EdgeLabeling::new(labels, modulus)
    }))
}

struct Search<'a> {
    g: &'a MultiGraph,
    meter: &'a Meter,
    sums: VertexSums,
    labels: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn assign(&mut self, edge: usize) -> Step {
        let q = self.labels.len();
        if edge == q {
            return Step::Found;
        }
        let (u, v) = self.g.endpoints(edge);
        for label in 1..=q {
            if self.used[label] {
                continue;
            }
            if !self.meter.tick() {
                return Step::OutOfBudget;
            }
            if !self.sums.apply(u, v, label) {
                continue;
            }
            self.used[label] = true;
            self.labels[edge] = label;
            let step = self.assign(edge + 1);
            if step != Step::Continue {
                return step;
            }
            self.labels[edge] = 0;
            self.used[label] = false;
            self.sums.retract(u, v, label);
        }
        Step::Continue
    }
}
