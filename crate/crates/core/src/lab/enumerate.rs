//! Exhaustive generation of m-edge r-graphs on [n], optionally one
//! representative per isomorphism class via minimum-image canonical form.

use itertools::Itertools;

use crate::binom::binomial;
use crate::error::{HgError, Result};
use crate::hypergraph::Hypergraph;
use crate::rset::{colex_rank, RSet};

/// Sorted colex ranks of the edge set minimized over all vertex
/// permutations. Feasible for n <= 7.
pub fn canonical_signature(g: &Hypergraph) -> Vec<u64> {
    let n = g.n();
    let mut best: Option<Vec<u64>> = None;
    for perm in (1..=n as u32).permutations(n) {
        let mut sig: Vec<u64> = g
            .edges()
            .iter()
            .map(|e| {
                let mapped: Vec<u32> = e
                    .elements()
                    .iter()
                    .map(|&v| perm[v as usize - 1])
                    .collect();
                colex_rank(&RSet::new(mapped).expect("permutation keeps labels distinct"))
            })
            .collect();
        sig.sort_unstable();
        if best.as_ref().is_none_or(|b| sig < *b) {
            best = Some(sig);
        }
    }
    best.unwrap_or_default()
}

/// True when the graph is the minimum of its isomorphism orbit, i.e. its
/// own canonical form.
pub fn is_canonical_representative(g: &Hypergraph) -> bool {
    g.colex_signature() == canonical_signature(g)
}

/// Every m-edge subgraph of [n]^{(r)}, in deterministic order. With
/// `up_to_iso` only minimum-image representatives are kept (intended for
/// n <= 7).
pub fn enumerate_graphs(
    r: usize,
    n: usize,
    m: usize,
    up_to_iso: bool,
) -> Result<Vec<Hypergraph>> {
    let total = binomial(n as u64, r as u64);
    if m as u64 > total {
        return Err(HgError::InvalidArgument(format!(
            "m = {m} exceeds C({n}, {r}) = {total}"
        )));
    }
    let all_edges: Vec<RSet> = crate::hypergraph::make_complete(n.max(r), r)?
        .edges()
        .iter()
        .filter(|e| e.max_label() as usize <= n)
        .cloned()
        .collect();
    debug_assert_eq!(all_edges.len() as u64, total);
    let mut out = Vec::new();
    for combo in all_edges.iter().combinations(m) {
        let edges: Vec<RSet> = combo.into_iter().cloned().collect();
        let g = Hypergraph::new(r, n, edges)?;
        if !up_to_iso || is_canonical_representative(&g) {
            out.push(g);
        }
    }
    Ok(out)
}
