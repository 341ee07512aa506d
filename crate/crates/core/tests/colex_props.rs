//! Invariants of the colex machinery, compression, and normalization.

use std::cmp::Ordering;

use proptest::prelude::*;

use hyperlag::binom::binomial;
use hyperlag::hypergraph::Hypergraph;
use hyperlag::{
    colex_compare, colex_rank, colex_unrank, make_colex_graph, make_complete, DescendantRelation,
    RSet,
};

#[test]
fn colex_round_trip() {
    for r in 1..=5 {
        for k in 0..10_000u64 {
            let s = colex_unrank(r, k);
            assert_eq!(s.len(), r);
            assert_eq!(colex_rank(&s), k, "r = {r}, k = {k}");
        }
    }
}

#[test]
fn colex_compare_agrees_with_rank_on_triples_of_7() {
    let triples: Vec<RSet> = (0..binomial(7, 3)).map(|k| colex_unrank(3, k)).collect();
    for a in &triples {
        for b in &triples {
            let by_order = colex_compare(a, b).unwrap();
            let by_rank = colex_rank(a).cmp(&colex_rank(b));
            assert_eq!(by_order, by_rank, "{a:?} vs {b:?}");
        }
    }
}

#[test]
fn colex_prefix_of_full_length_is_complete() {
    for r in 2..=4usize {
        for t in (r + 1)..=8usize {
            let m = binomial(t as u64, r as u64);
            let prefix = make_colex_graph(r, m).unwrap();
            let complete = make_complete(t, r).unwrap();
            assert_eq!(prefix.edges(), complete.edges(), "r = {r}, t = {t}");
        }
    }
}

#[test]
fn colex_graphs_are_left_compressed() {
    for r in 2..=4usize {
        for m in 0..=100u64 {
            let g = make_colex_graph(r, m).unwrap();
            assert!(g.is_left_compressed(), "r = {r}, m = {m}");
        }
    }
}

/// A small random hypergraph: r in [2,4], n in [r+1, 7], 1..=10 edges.
fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (2usize..=4)
        .prop_flat_map(|r| ((Just(r)), (r + 1)..=7usize))
        .prop_flat_map(|(r, n)| {
            let pool = binomial(n as u64, r as u64) as usize;
            (
                Just(r),
                Just(n),
                proptest::collection::btree_set(0..pool as u64, 1..=pool.min(10)),
            )
        })
        .prop_map(|(r, n, ranks)| {
            let edges = ranks.iter().map(|&k| colex_unrank(r, k)).collect();
            Hypergraph::new(r, n, edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn compress_preserves_edge_count_and_lowers_ranks(g in arb_hypergraph()) {
        let pre: u64 = g.edges().iter().map(colex_rank).sum();
        for j in 2..=g.n() as u32 {
            for i in 1..j {
                let h = g.compress(i, j).unwrap();
                prop_assert_eq!(h.edge_count(), g.edge_count());
                let post: u64 = h.edges().iter().map(colex_rank).sum();
                prop_assert!(post <= pre, "compress({i},{j}) raised total colex rank");
                // per-edge: each replaced edge maps to a strictly smaller rank
                for (e, f) in g.edges().iter().zip(h.edges()) {
                    prop_assert!(colex_rank(f) <= colex_rank(e));
                }
            }
        }
    }

    #[test]
    fn compression_fixpoint_is_left_compressed(g in arb_hypergraph()) {
        let h = g.compress_to_fixpoint();
        prop_assert!(h.is_left_compressed());
        prop_assert_eq!(h.edge_count(), g.edge_count());
        // idempotent
        prop_assert_eq!(&h.compress_to_fixpoint(), &h);
    }

    #[test]
    fn descendant_relation_is_a_strict_partial_order(
        ranks in proptest::collection::vec(0..3000u64, 3)
    ) {
        let sets: Vec<RSet> = ranks.iter().map(|&k| colex_unrank(3, k)).collect();
        let desc = |a: &RSet, b: &RSet| {
            matches!(
                hyperlag::rset::descendant_relation(a, b).unwrap(),
                DescendantRelation::Descendant | DescendantRelation::DirectDescendant
            )
        };
        // irreflexive
        for s in &sets {
            prop_assert!(!desc(s, s));
        }
        // antisymmetric and transitive on the sampled triple
        let (a, b, c) = (&sets[0], &sets[1], &sets[2]);
        if desc(a, b) {
            prop_assert!(!desc(b, a));
        }
        if desc(a, b) && desc(b, c) {
            prop_assert!(desc(a, c));
        }
    }
}

/// Weightings with descending coordinates, as in the relabeling step that
/// precedes normalization.
fn descending_weights(n: usize, seed: u64) -> Vec<f64> {
    let mut v: Vec<f64> = (0..n)
        .map(|i| {
            let z = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(i as u64 * 1442695040888963407);
            ((z >> 11) as f64 / (1u64 << 53) as f64) + 1e-3
        })
        .collect();
    v.sort_by(|a, b| b.partial_cmp(a).unwrap());
    let s: f64 = v.iter().sum();
    v.iter().map(|x| x / s).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    /// The four normalization postconditions: edge count preserved, the
    /// objective does not drop at any descending weighting, the top edge
    /// (t-r)...(t-1) is gone, and the result is descendant-closed apart
    /// from that edge.
    #[test]
    fn normalize_satisfies_all_four_properties(g in arb_hypergraph(), seed in any::<u64>()) {
        let t = g.n() + 1; // G lives on [t] with vertex t untouched
        let forbidden = RSet::of(
            &((t - g.r()) as u32..=(t - 1) as u32).collect::<Vec<_>>(),
        );
        let h = g.normalize_left_compressed(t).unwrap();

        prop_assert_eq!(h.edge_count(), g.edge_count());
        prop_assert!(!h.contains_edge(&forbidden));
        for e in h.edges() {
            for d in Hypergraph::descendants_of(e) {
                if d != forbidden {
                    prop_assert!(h.contains_edge(&d), "missing descendant {d:?} of {e:?}");
                }
            }
        }
        let x = hyperlag::Weighting::new(descending_weights(t, seed)).unwrap();
        let g_t = g.with_vertex_count(t).unwrap();
        let before = hyperlag::evaluate(&g_t, &x).unwrap();
        let after = hyperlag::evaluate(&h, &x).unwrap();
        prop_assert!(after >= before - 1e-15, "descending weighting lost value");
    }
}

#[test]
fn colex_compare_matches_symmetric_difference_rule() {
    // direct check of the defining rule on all pairs of triples of [6]
    let triples: Vec<RSet> = (0..binomial(6, 3)).map(|k| colex_unrank(3, k)).collect();
    for a in &triples {
        for b in &triples {
            if a == b {
                assert_eq!(colex_compare(a, b).unwrap(), Ordering::Equal);
                continue;
            }
            let max_diff = a
                .elements()
                .iter()
                .chain(b.elements())
                .filter(|v| a.contains(**v) != b.contains(**v))
                .max()
                .copied()
                .unwrap();
            let expect = if b.contains(max_diff) {
                Ordering::Less
            } else {
                Ordering::Greater
            };
            assert_eq!(colex_compare(a, b).unwrap(), expect);
        }
    }
}
