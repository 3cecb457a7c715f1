//! Backtracking oracles: edge-graceful labelings, striations, and a sweep
//! that tabulates every method on a family of graphs.

mod graceful;
mod striation;
mod sweep;

pub use graceful::search_edge_graceful;
pub use striation::search_striation;
pub use sweep::{
    conjecture_sweep, FamilySpec, SweepConfig, SweepReport, SweepRow, SweepVerdict, SWEEP_HEADER,
};

/// Incremental induced-label bookkeeping shared by the searches. Labels are
/// plain `usize` in `1..=q` while searching and converted at the end.
struct VertexSums {
    p: usize,
    remaining: Vec<usize>,
    sum: Vec<usize>,
    taken: Vec<bool>,
}

impl VertexSums {
    /// `None` when isolated vertices already collide (more than one vertex
    /// with no edges means two induced labels of 0).
    fn new(g: &crate::graph::MultiGraph) -> Option<Self> {
        let p = g.vertex_count();
        let mut sums = Self {
            p,
            remaining: (0..p).map(|v| g.degree(v)).collect(),
            sum: vec![0; p],
            taken: vec![false; p],
        };
        for v in 0..p {
            if sums.remaining[v] == 0 {
                if sums.taken[0] {
                    return None;
                }
                sums.taken[0] = true;
            }
        }
        Some(sums)
    }

    /// Adds `label` on edge `(u, v)`. Returns `false`, with nothing changed,
    /// when an endpoint completes onto an induced label already taken.
    fn apply(&mut self, u: usize, v: usize, label: usize) -> bool {
        let add = label % self.p;
        let mut claimed = [None; 2];
        for (slot, w) in [u, v].into_iter().enumerate() {
            self.remaining[w] -= 1;
            self.sum[w] = (self.sum[w] + add) % self.p;
            if self.remaining[w] == 0 {
                let residue = self.sum[w];
                if self.taken[residue] {
                    // Roll back this endpoint and the earlier one.
                    self.unwind(&[u, v][..=slot], add, &claimed);
                    return false;
                }
                self.taken[residue] = true;
                claimed[slot] = Some(residue);
            }
        }
        true
    }

    fn retract(&mut self, u: usize, v: usize, label: usize) {
        let add = label % self.p;
        let claimed = [u, v].map(|w| (self.remaining[w] == 0).then(|| self.sum[w]));
        self.unwind(&[u, v], add, &claimed);
    }

    fn unwind(&mut self, endpoints: &[usize], add: usize, claimed: &[Option<usize>; 2]) {
        for (slot, &w) in endpoints.iter().enumerate().rev() {
            if let Some(residue) = claimed[slot] {
                self.taken[residue] = false;
            }
            self.remaining[w] += 1;
            self.sum[w] = (self.sum[w] + self.p - add) % self.p;
        }
    }
}
