//! Test-only oracles, independent of the library's search and verification
//! paths.

#![allow(dead_code)]

use edge_graceful::MultiGraph;
use itertools::Itertools;

/// Induced labels by scanning the edge list (not the incidence lists) with
/// wide integers.
pub fn brute_induced(g: &MultiGraph, labels: &[u64], modulus: u64) -> Vec<u64> {
    let mut sums = vec![0u128; g.vertex_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        sums[u] += labels[e] as u128;
        sums[v] += labels[e] as u128;
    }
    sums.into_iter()
        .map(|s| (s % modulus as u128) as u64)
        .collect()
}

pub fn brute_is_bijection(labels: &[u64]) -> bool {
    let mut sorted = labels.to_vec();
    sorted.sort_unstable();
    sorted.iter().copied().eq(1..=labels.len() as u64)
}

/// Distinct induced labels and a bijection onto `1..=q`.
pub fn brute_is_graceful(g: &MultiGraph, labels: &[u64]) -> bool {
    if !brute_is_bijection(labels) {
        return false;
    }
    let induced = brute_induced(g, labels, g.vertex_count() as u64);
    induced.iter().all_unique()
}

/// First collision `(u, v)`: smallest `v` whose induced label repeats an
/// earlier vertex `u`.
pub fn brute_first_collision(induced: &[u64]) -> Option<(usize, usize)> {
    for v in 0..induced.len() {
        if let Some(u) = (0..v).find(|&u| induced[u] == induced[v]) {
            return Some((u, v));
        }
    }
    None
}

/// Result of enumerating all `q!` labelings in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub total: usize,
    pub valid: usize,
    pub first: Option<Vec<u64>>,
}

pub fn enumerate_all(g: &MultiGraph) -> Enumeration {
    let q = g.edge_count() as u64;
    let mut result = Enumeration {
        total: 0,
        valid: 0,
        first: None,
    };
    for perm in (1..=q).permutations(q as usize) {
        result.total += 1;
        if brute_is_graceful(g, &perm) {
            result.valid += 1;
            if result.first.is_none() {
                result.first = Some(perm);
            }
        }
    }
    result
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}
