//! Exact maximum-clique search for r-graphs: branch and bound over
//! degree-ordered vertices, with edge-by-edge witness verification.

use itertools::Itertools;

use crate::error::{HgError, Result};
use crate::hypergraph::Hypergraph;
use crate::rset::RSet;

/// Largest t such that some t vertices induce a complete r-graph, with a
/// verified witness. Order 0 for the empty graph, order r for one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub order: usize,
    pub witness: Vec<u32>,
}

/// Every (r-1)-subset of `current`, extended by `v`, must be an edge.
fn compatible(g: &Hypergraph, current: &[u32], v: u32) -> bool {
    let r = g.r();
    if current.len() + 1 < r {
        return true;
    }
    current
        .iter()
        .copied()
        .combinations(r - 1)
        .all(|mut sub| {
            sub.push(v);
            g.contains_edge(&RSet::new(sub).expect("distinct labels"))
        })
}

/// Depth-first extension over `order[start..]`; prunes branches that cannot
/// beat `best`, stops early once `target` is reached.
fn search(
    g: &Hypergraph,
    order: &[u32],
    start: usize,
    current: &mut Vec<u32>,
    best: &mut Vec<u32>,
    target: Option<usize>,
) -> bool {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if let Some(t) = target {
        if best.len() >= t {
            return true;
        }
    }
    for idx in start..order.len() {
        if current.len() + (order.len() - idx) <= best.len() {
            break;
        }
        let v = order[idx];
        if compatible(g, current, v) {
            current.push(v);
            if search(g, order, idx + 1, current, best, target) {
                return true;
            }
            current.pop();
        }
    }
    false
}

fn degree_order(g: &Hypergraph) -> Vec<u32> {
    let mut order: Vec<u32> = (1..=g.n() as u32).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order
}

fn verify_witness(g: &Hypergraph, witness: &[u32]) -> bool {
    witness
        .iter()
        .copied()
        .combinations(g.r())
        .all(|sub| g.contains_edge(&RSet::new(sub).expect("distinct labels")))
}

/// Whether some t vertices induce a complete r-graph; returns a witness
/// when they do.
pub fn has_clique_of_order(g: &Hypergraph, t: usize) -> Result<Option<Vec<u32>>> {
    if t < g.r() {
        return Err(HgError::InvalidArgument(format!(
            "clique order {t} below uniformity {}",
            g.r()
        )));
    }
    if t > g.n() || g.edge_count() == 0 {
        return Ok(None);
    }
    let order = degree_order(g);
    let mut best = Vec::new();
    let mut current = Vec::new();
    search(g, &order, 0, &mut current, &mut best, Some(t));
    if best.len() >= t {
        let mut witness = best[..t].to_vec();
        witness.sort_unstable();
        debug_assert!(verify_witness(g, &witness));
        Ok(Some(witness))
    } else {
        Ok(None)
    }
}

/// Exact maximum clique order with a verified witness.
pub fn max_clique_order(g: &Hypergraph) -> CliqueResult {
    if g.edge_count() == 0 {
        return CliqueResult {
            order: 0,
            witness: Vec::new(),
        };
    }
    let order = degree_order(g);
    let mut best = Vec::new();
    let mut current = Vec::new();
    search(g, &order, 0, &mut current, &mut best, None);
    best.sort_unstable();
    assert!(verify_witness(g, &best), "witness failed re-verification");
    CliqueResult {
        order: best.len(),
        witness: best,
    }
}
