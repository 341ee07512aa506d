//! Clique-finder invariants: exhaustive agreement with brute force,
//! monotonicity under edge addition, and witness soundness.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use hyperlag::binom::binomial;
use hyperlag::{colex_unrank, has_clique_of_order, max_clique_order, Hypergraph, RSet};

/// Brute force: the largest subset of [n] all of whose r-subsets are edges.
fn brute_force_order(g: &Hypergraph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let n = g.n();
    let mut best = 0;
    for mask in 1u32..(1 << n) {
        let verts: Vec<u32> = (0..n as u32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect();
        if verts.len() < g.r() || verts.len() <= best {
            continue;
        }
        let mut ok = true;
        let mut idx = vec![0usize; g.r()];
        // iterate r-subsets of verts
        fn rec(verts: &[u32], idx: &mut [usize], pos: usize, lo: usize, g: &Hypergraph, ok: &mut bool) {
            if !*ok {
                return;
            }
            if pos == idx.len() {
                let e = RSet::of(&idx.iter().map(|&i| verts[i]).collect::<Vec<_>>());
                if !g.contains_edge(&e) {
                    *ok = false;
                }
                return;
            }
            for i in lo..verts.len() {
                idx[pos] = i;
                rec(verts, idx, pos + 1, i + 1, g, ok);
            }
        }
        rec(&verts, &mut idx, 0, 0, g, &mut ok);
        if ok {
            best = verts.len();
        }
    }
    best
}

#[test]
fn exhaustive_agreement_on_2_graphs_n6() {
    let pool = binomial(6, 2) as usize; // 15 edges
    for mask in 0u32..(1 << pool) {
        let edges: Vec<_> = (0..pool)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| colex_unrank(2, b as u64))
            .collect();
        let g = Hypergraph::new(2, 6, edges).unwrap();
        let fast = max_clique_order(&g).order;
        let slow = brute_force_order(&g);
        assert_eq!(fast, slow, "mask {mask:#06x}");
    }
}

#[test]
fn adding_an_edge_never_decreases_the_clique_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..500 {
        let r = rng.gen_range(2..=4usize);
        let n = rng.gen_range(r + 1..=7usize);
        let pool = binomial(n as u64, r as u64) as usize;
        let m = rng.gen_range(1..pool);
        let picks = rand::seq::index::sample(&mut rng, pool, m + 1);
        let mut edges: Vec<_> = picks.iter().map(|k| colex_unrank(r, k as u64)).collect();
        let extra = edges.pop().unwrap();
        let g = Hypergraph::new(r, n, edges.clone()).unwrap();
        edges.push(extra);
        let h = Hypergraph::new(r, n, edges).unwrap();
        assert!(max_clique_order(&h).order >= max_clique_order(&g).order);
    }
}

#[test]
fn every_witness_reverifies() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let r = rng.gen_range(2..=4usize);
        let n = rng.gen_range(r + 1..=7usize);
        let pool = binomial(n as u64, r as u64) as usize;
        let m = rng.gen_range(1..=pool);
        let picks = rand::seq::index::sample(&mut rng, pool, m);
        let edges = picks.iter().map(|k| colex_unrank(r, k as u64)).collect();
        let g = Hypergraph::new(r, n, edges).unwrap();
        let res = max_clique_order(&g);
        if res.order == 0 {
            assert_eq!(g.edge_count(), 0);
            continue;
        }
        assert_eq!(res.witness.len(), res.order);
        let found = has_clique_of_order(&g, res.order).unwrap();
        assert!(found.is_some());
        // and there is nothing larger
        if res.order < n {
            assert!(has_clique_of_order(&g, res.order + 1).unwrap().is_none());
        }
    }
}
