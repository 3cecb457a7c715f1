mod common;

use common::brute_induced;
use edge_graceful::{
    complete, cycle, cycle_power, disjoint_union, extract_stria_bases, induced_shift_check,
    induced_vertex_labels, lift_striaeform, lift_theorem2, lo_condition, regularity, residue_rep,
    search_edge_graceful, search_striation, two_factorize, verify_edge_graceful, verify_striation,
    EdgeLabeling, MultiGraph, SearchBudget, Striation, TwoFactorization, UnionIndex,
};
use proptest::prelude::*;

/// Union of `r` random spanning cycles (2-cycles of parallel edges when
/// `p = 2`), so always 2r-regular; edge order follows the generated cycles.
fn arb_two_r_regular(max_p: usize, max_r: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_p, 1..=max_r).prop_flat_map(|(p, r)| {
        proptest::collection::vec(proptest::collection::vec(any::<u32>(), p), r).prop_map(
            move |keys| {
                let mut edges = Vec::new();
                for factor_keys in keys {
                    let mut order: Vec<usize> = (0..p).collect();
                    order.sort_by_key(|&v| (factor_keys[v], v));
                    edges.extend((0..p).map(|i| (order[i], order[(i + 1) % p])));
                }
                MultiGraph::new(p, edges).unwrap()
            },
        )
    })
}

/// Any loop-free multigraph with at least one edge.
fn arb_multigraph(max_p: usize, max_q: usize) -> impl Strategy<Value = MultiGraph> {
    (2..=max_p).prop_flat_map(move |p| {
        proptest::collection::vec((0..p, 1..p), 1..=max_q).prop_map(move |pairs| {
            let edges = pairs.into_iter().map(|(u, d)| (u, (u + d) % p)).collect();
            MultiGraph::new(p, edges).unwrap()
        })
    })
}

fn degree_sum(g: &MultiGraph) -> usize {
    (0..g.vertex_count()).map(|v| g.degree(v)).sum()
}

fn permutation_of(n: usize, keys: &[u32]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (keys[i % keys.len()], i));
    order
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cycle_powers_are_well_formed(n in 3usize..30, k in 1usize..16) {
        let g = cycle_power(n, k).unwrap();
        prop_assert_eq!(degree_sum(&g), 2 * g.edge_count());
        prop_assert!(g.edges().iter().all(|&(u, v)| u != v && u < n && v < n));
        prop_assert_eq!(&g, &cycle_power(n, k).unwrap());
        if k < n / 2 {
            prop_assert_eq!(regularity(&g).degree, Some(2 * k));
        }
        // Simple graph: no repeated pairs.
        let mut pairs: Vec<_> = g.edges().iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        prop_assert_eq!(pairs.len(), g.edge_count());
    }

    #[test]
    fn unions_preserve_regularity_and_index_maps(g in arb_two_r_regular(7, 3), k in 1usize..5) {
        let union = disjoint_union(&g, k).unwrap();
        prop_assert_eq!(regularity(&union), regularity(&g));
        prop_assert_eq!(degree_sum(&union), 2 * union.edge_count());
        let index = UnionIndex::new(&g, k);
        for c in 0..k {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(index.split_vertex(index.vertex(c, v)), (c, v));
            }
            for e in 0..g.edge_count() {
                let (u, v) = g.endpoints(e);
                let ue = index.edge(c, e);
                prop_assert_eq!(index.split_edge(ue), (c, e));
                prop_assert_eq!(union.endpoints(ue), (index.vertex(c, u), index.vertex(c, v)));
            }
        }
    }

    #[test]
    fn two_factorizations_partition_the_edges(g in arb_two_r_regular(8, 3)) {
        let f = two_factorize(&g, SearchBudget::exhaustive()).unwrap().into_witness().unwrap();
        prop_assert_eq!(f.validate(&g), Ok(()));
        let mut all: Vec<usize> = f.factors().iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.edge_count()).collect::<Vec<_>>());
        for factor in f.factors() {
            let mut degree = vec![0; g.vertex_count()];
            for &e in factor {
                let (u, v) = g.endpoints(e);
                degree[u] += 1;
                degree[v] += 1;
            }
            prop_assert!(degree.iter().all(|&d| d == 2));
        }
    }

    #[test]
    fn induced_labels_match_brute_force(g in arb_multigraph(7, 10), keys in proptest::collection::vec(any::<u32>(), 10)) {
        let q = g.edge_count();
        let labels: Vec<u64> = permutation_of(q, &keys).into_iter().map(|i| i as u64 + 1).collect();
        let labeling = EdgeLabeling::for_graph(&g, labels.clone()).unwrap();
        let induced = induced_vertex_labels(&g, &labeling).unwrap().values;
        prop_assert_eq!(&induced, &brute_induced(&g, &labels, g.vertex_count() as u64));
        let valid = verify_edge_graceful(&g, &labeling).unwrap().is_valid();
        let mut sorted = induced.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(valid, sorted.len() == g.vertex_count());
        if valid {
            // Distinct residues: exactly 0..p.
            prop_assert_eq!(sorted, (0..g.vertex_count() as u64).collect::<Vec<_>>());
            prop_assert!(lo_condition(g.vertex_count() as u64, q as u64).unwrap().lo_divides);
        }
    }

    #[test]
    fn found_labelings_satisfy_divisibility(g in arb_multigraph(6, 7)) {
        let outcome = search_edge_graceful::<u64>(&g, SearchBudget::exhaustive()).unwrap();
        if let Some(l) = outcome.witness() {
            prop_assert!(verify_edge_graceful(&g, l).unwrap().is_valid());
            prop_assert!(lo_condition(g.vertex_count() as u64, g.edge_count() as u64).unwrap().lo_divides);
        } else {
            prop_assert!(outcome.is_none_exists());
        }
    }

    #[test]
    fn vertex_relabeling_preserves_verdict(
        g in arb_multigraph(7, 10),
        label_keys in proptest::collection::vec(any::<u32>(), 10),
        vertex_keys in proptest::collection::vec(any::<u32>(), 7),
    ) {
        let q = g.edge_count();
        let labels: Vec<u64> = permutation_of(q, &label_keys).into_iter().map(|i| i as u64 + 1).collect();
        let pi = permutation_of(g.vertex_count(), &vertex_keys);
        let h = MultiGraph::new(
            g.vertex_count(),
            g.edges().iter().map(|&(u, v)| (pi[u], pi[v])).collect(),
        ).unwrap();
        let a = verify_edge_graceful(&g, &EdgeLabeling::for_graph(&g, labels.clone()).unwrap()).unwrap();
        let b = verify_edge_graceful(&h, &EdgeLabeling::for_graph(&h, labels).unwrap()).unwrap();
        prop_assert_eq!(a.is_valid(), b.is_valid());
    }

    #[test]
    fn residue_rep_is_a_representative(x in 1u64..1_000_000, p in 1u64..1000) {
        let m = residue_rep(x, p);
        prop_assert!((1..=p).contains(&m));
        prop_assert_eq!(m % p, x % p);
    }

    #[test]
    fn graph_text_round_trips(g in arb_multigraph(9, 20)) {
        let text = g.to_text();
        let parsed = MultiGraph::from_text(&text).unwrap();
        prop_assert_eq!(parsed.to_text(), text);
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn labeling_text_round_trips(labels in proptest::collection::vec(any::<u64>(), 0..20), modulus in 1u64..50) {
        let l = EdgeLabeling::new(labels, modulus);
        prop_assert_eq!(EdgeLabeling::from_text(&l.to_text(), modulus).unwrap(), l);
    }
}

fn first_labeling(g: &MultiGraph) -> EdgeLabeling<u64> {
    search_edge_graceful(g, SearchBudget::exhaustive())
        .unwrap()
        .into_witness()
        .unwrap()
}

fn first_striation(g: &MultiGraph) -> Striation<u64> {
    search_striation(g, SearchBudget::exhaustive())
        .unwrap()
        .into_witness()
        .unwrap()
}

/// `t`-fold parallel copy of every edge of `g`.
fn thicken(g: &MultiGraph, times: usize) -> MultiGraph {
    let mut edges = Vec::new();
    for _ in 0..times {
        edges.extend_from_slice(g.edges());
    }
    MultiGraph::new(g.vertex_count(), edges).unwrap()
}

#[test]
fn theorem2_central_identity() {
    let bases = [
        cycle(3).unwrap(),
        cycle(5).unwrap(),
        cycle(7).unwrap(),
        cycle(9).unwrap(),
        complete(5).unwrap(),
    ];
    for g in &bases {
        let base = first_labeling(g);
        let r = regularity(g).r.unwrap() as u64;
        let p = g.vertex_count() as u64;
        for k in [1usize, 3, 5, 7] {
            let kp = k as u64 * p;
            if num_gcd(r, kp) != 1 {
                continue;
            }
            let base_induced = brute_induced(g, base.labels(), kp);
            let lifted = lift_theorem2(g, &base, k).unwrap();
            let mut labels = lifted.labeling.labels().to_vec();
            labels.sort_unstable();
            assert_eq!(
                labels,
                (1..=(k * g.edge_count()) as u64).collect::<Vec<_>>()
            );
            let induced = brute_induced(&lifted.union, lifted.labeling.labels(), kp);
            let index = UnionIndex::new(g, k);
            for j in 0..k as u64 {
                for v in 0..g.vertex_count() {
                    let expected = (base_induced[v] + 2 * r * r * j * p) % kp;
                    assert_eq!(induced[index.vertex(j as usize, v)], expected);
                }
            }
        }
    }
}

fn num_gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

/// Checks the block layout and the induced-label structure of a
/// striation lift, for either parity of `r`.
fn check_striaeform(g: &MultiGraph, s: &Striation<u64>, k: usize) {
    let lifted = lift_striaeform(g, s, k).unwrap();
    let p = g.vertex_count();
    let r = s.factorization.len();
    let kp = (k * p) as u64;
    let t = r / 2;
    let index = UnionIndex::new(g, k);
    for (j0, factor) in s.factorization.factors().iter().enumerate() {
        let j = j0 + 1;
        let block = if r % 2 == 1 {
            if j <= t + 1 {
                j
            } else {
                3 * t + 3 - j
            }
        } else if j <= t {
            j
        } else {
            3 * t + 1 - j
        } as u64;
        let mut seen = Vec::new();
        for &e in factor {
            for c in 0..k {
                let label = lifted.labeling.label(index.edge(c, e));
                assert!(
                    label > (block - 1) * kp && label <= block * kp,
                    "stria {j} block {block}"
                );
                seen.push(label);
            }
        }
        seen.sort_unstable();
        assert_eq!(
            seen,
            ((block - 1) * kp + 1..=block * kp).collect::<Vec<_>>()
        );
    }
    assert!(induced_shift_check(g, s, k, &lifted.labeling).unwrap());
    let mut induced = brute_induced(&lifted.union, lifted.labeling.labels(), kp);
    induced.sort_unstable();
    assert_eq!(induced, (0..kp).collect::<Vec<_>>());
}

#[test]
fn striaeform_lifts_across_parities() {
    let triple_triangle = thicken(&cycle(3).unwrap(), 3);
    let quad_triangle = thicken(&cycle(3).unwrap(), 4);
    let k5_plus_cycle = {
        let mut edges = complete(5).unwrap().edges().to_vec();
        edges.extend_from_slice(cycle(5).unwrap().edges());
        MultiGraph::new(5, edges).unwrap()
    };
    let graphs = [
        cycle(3).unwrap(),    // r = 1
        complete(5).unwrap(), // r = 2
        triple_triangle,      // r = 3
        k5_plus_cycle,        // r = 3
        quad_triangle,        // r = 4
    ];
    for g in &graphs {
        let s = first_striation(g);
        assert!(verify_striation(g, &s).unwrap().is_valid());
        for k in [1, 3, 5, 7, 9] {
            check_striaeform(g, &s, k);
        }
    }
}

#[test]
fn stria_order_is_irrelevant_to_validity_and_lifting() {
    let g = complete(5).unwrap();
    let s = first_striation(&g);
    let reversed = Striation::new(
        TwoFactorization::new(s.factorization.factors().iter().rev().cloned().collect()),
        s.labeling.clone(),
    );
    assert!(verify_striation(&g, &reversed).unwrap().is_valid());
    check_striaeform(&g, &reversed, 3);
}

#[test]
fn stria_bases_reconstruct_the_labeling() {
    for g in [
        cycle(5).unwrap(),
        complete(5).unwrap(),
        thicken(&cycle(3).unwrap(), 3),
    ] {
        let s = first_striation(&g);
        let bases = extract_stria_bases(&g, &s).unwrap();
        let p = g.vertex_count() as u64;
        let mut rebuilt = vec![0u64; g.edge_count()];
        for row in &bases.rows {
            let mut row_bases: Vec<u64> = row.iter().map(|entry| entry.base).collect();
            row_bases.sort_unstable();
            assert_eq!(row_bases, (1..=p).collect::<Vec<_>>());
            for entry in row {
                rebuilt[entry.edge] = entry.base + entry.multiple * p;
            }
        }
        assert_eq!(rebuilt, s.labeling.labels());
    }
}

#[test]
fn both_lifts_verify_whenever_both_apply() {
    let g = complete(5).unwrap();
    let base = first_labeling(&g);
    let s = first_striation(&g);
    for k in [1, 3, 5, 7, 9, 11] {
        let a = lift_theorem2(&g, &base, k).unwrap();
        let b = lift_striaeform(&g, &s, k).unwrap();
        assert!(verify_edge_graceful(&a.union, &a.labeling)
            .unwrap()
            .is_valid());
        assert!(verify_edge_graceful(&b.union, &b.labeling)
            .unwrap()
            .is_valid());
    }
}
