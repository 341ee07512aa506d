//! r-uniform hypergraphs on [n]: colex construction, neighborhoods,
//! left-compression, and the descendant normalization procedure.

use serde::{Deserialize, Serialize};

use crate::binom::binomial;
use crate::error::{HgError, Result};
use crate::rset::{colex_rank, colex_unrank, RSet};

/// An r-uniform hypergraph on vertex set [n]. Edges are kept sorted by
/// colex rank, duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    r: usize,
    n: usize,
    edges: Vec<RSet>,
}

#[derive(Deserialize)]
struct RawHypergraph {
    r: usize,
    n: usize,
    edges: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = RawHypergraph::deserialize(deserializer)?;
        let edges = raw
            .edges
            .into_iter()
            .map(RSet::new)
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Hypergraph::new(raw.r, raw.n, edges).map_err(serde::de::Error::custom)
    }
}

impl Hypergraph {
    pub fn new(r: usize, n: usize, mut edges: Vec<RSet>) -> Result<Self> {
        if r < 2 {
            return Err(HgError::InvalidArgument(format!("uniformity {r} < 2")));
        }
        for e in &edges {
            if e.len() != r {
                return Err(HgError::InvalidArgument(format!(
                    "edge {e} has {} elements, expected {r}",
                    e.len()
                )));
            }
            if e.max_label() as usize > n {
                return Err(HgError::InvalidArgument(format!(
                    "edge {e} exceeds vertex count {n}"
                )));
            }
        }
        edges.sort_by_key(colex_rank);
        if edges.windows(2).any(|w| w[0] == w[1]) {
            return Err(HgError::InvalidArgument("duplicate edge".into()));
        }
        Ok(Hypergraph { r, n, edges })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[RSet] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: &RSet) -> bool {
        self.edges
            .binary_search_by_key(&colex_rank(e), colex_rank)
            .is_ok()
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    /// Sorted colex ranks of the edges; a cheap isomorphism-sensitive id.
    pub fn colex_signature(&self) -> Vec<u64> {
        self.edges.iter().map(colex_rank).collect()
    }

    /// The same edge set re-hosted on `n` vertices.
    pub fn with_vertex_count(&self, n: usize) -> Result<Hypergraph> {
        Hypergraph::new(self.r, n, self.edges.clone())
    }

    /// One JSON record in the hypergraph text format.
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("hypergraph serializes")
    }

    pub fn from_line(line: &str) -> Result<Hypergraph> {
        serde_json::from_str(line.trim()).map_err(|e| HgError::Parse(e.to_string()))
    }

    fn check_vertex(&self, v: u32) -> Result<()> {
        if v == 0 || v as usize > self.n {
            return Err(HgError::InvalidArgument(format!(
                "vertex {v} out of range [1, {}]",
                self.n
            )));
        }
        Ok(())
    }

    /// (r-1)-neighborhood E_i = { A : A ∪ {i} ∈ E }.
    pub fn link(&self, i: u32) -> Result<Vec<RSet>> {
        self.check_vertex(i)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i))
            .map(|e| e.without(i).expect("i in edge"))
            .collect())
    }

    /// (r-2)-neighborhood E_ij = { B : B ∪ {i,j} ∈ E }.
    pub fn pair_link(&self, i: u32, j: u32) -> Result<Vec<RSet>> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(HgError::InvalidArgument("pair link needs i != j".into()));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| e.contains(i) && e.contains(j))
            .map(|e| e.without(i).and_then(|f| f.without(j)).expect("i,j in edge"))
            .collect())
    }

    /// Complement E_i^c = { A in [n]^{(r-1)} : A ∪ {i} in [n]^{(r)} \ E }.
    /// Sets containing i are excluded since A ∪ {i} is then not an r-set.
    pub fn link_complement(&self, i: u32) -> Result<Vec<RSet>> {
        self.check_vertex(i)?;
        let mut out = Vec::new();
        let total = binomial(self.n as u64, self.r as u64 - 1);
        for k in 0..total {
            let a = colex_unrank(self.r - 1, k);
            if a.max_label() as usize > self.n || a.contains(i) {
                continue;
            }
            let full = a.with(i).expect("i not in a");
            if !self.contains_edge(&full) {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// E_{i\j} = E_i ∩ E_j^c: sets A with A ∪ {i} an edge, j ∉ A, and
    /// A ∪ {j} not an edge.
    pub fn link_difference(&self, i: u32, j: u32) -> Result<Vec<RSet>> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(HgError::InvalidArgument(
                "link difference needs i != j".into(),
            ));
        }
        Ok(self
            .link(i)?
            .into_iter()
            .filter(|a| {
                !a.contains(j) && !self.contains_edge(&a.with(j).expect("j not in a"))
            })
            .collect())
    }

    /// Left-compressed: every edge keeps being an edge after replacing any
    /// label j by a smaller absent label i; equivalently E_{j\i} is empty
    /// for all i < j.
    pub fn is_left_compressed(&self) -> bool {
        for e in &self.edges {
            for &j in e.elements() {
                for i in 1..j {
                    if e.contains(i) {
                        continue;
                    }
                    let image = e
                        .without(j)
                        .and_then(|f| f.with(i))
                        .expect("valid replacement");
                    if !self.contains_edge(&image) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Elementary compression C_{ij}: each edge containing j but not i is
    /// replaced by its image under j -> i unless the image is already an
    /// edge, in which case the edge is retained. Edge count is preserved.
    pub fn compress(&self, i: u32, j: u32) -> Result<Hypergraph> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i >= j {
            return Err(HgError::InvalidArgument(format!(
                "compression needs i < j, got ({i}, {j})"
            )));
        }
        let new_edges = self
            .edges
            .iter()
            .map(|e| {
                if e.contains(j) && !e.contains(i) {
                    let image = e
                        .without(j)
                        .and_then(|f| f.with(i))
                        .expect("valid replacement");
                    if self.contains_edge(&image) {
                        e.clone()
                    } else {
                        image
                    }
                } else {
                    e.clone()
                }
            })
            .collect();
        Hypergraph::new(self.r, self.n, new_edges)
    }

    /// Applies compress over all pairs i < j until no step changes the
    /// edge set. The result is left-compressed.
    pub fn compress_to_fixpoint(&self) -> Hypergraph {
        let mut g = self.clone();
        loop {
            let mut changed = false;
            for j in 2..=g.n as u32 {
                for i in 1..j {
                    let h = g.compress(i, j).expect("valid pair");
                    if h != g {
                        g = h;
                        changed = true;
                    }
                }
            }
            if !changed {
                return g;
            }
        }
    }

    /// All proper descendants of `e`: coordinatewise dominated r-sets with
    /// strictly smaller sum.
    pub fn descendants_of(e: &RSet) -> Vec<RSet> {
        let mut out = Vec::new();
        let bounds = e.elements();
        let r = bounds.len();
        let mut current = vec![0u32; r];
        fn rec(bounds: &[u32], current: &mut Vec<u32>, pos: usize, out: &mut Vec<RSet>) {
            if pos == bounds.len() {
                out.push(RSet::of(current));
                return;
            }
            let lo = if pos == 0 { 1 } else { current[pos - 1] + 1 };
            for v in lo..=bounds[pos] {
                current[pos] = v;
                rec(bounds, current, pos + 1, out);
            }
        }
        rec(bounds, &mut current, 0, &mut out);
        out.retain(|d| d != e);
        out
    }

    /// Normalization from the left-compression argument: on vertex set [t],
    /// first swap the edge (t-r)...(t-1) for the lowest missing r-set of
    /// [t-1] if present, then repeatedly replace any edge having a missing
    /// descendant other than (t-r)...(t-1) by its lowest such descendant
    /// (smallest sum, ties by colex rank), until descendant-closed.
    pub fn normalize_left_compressed(&self, t: usize) -> Result<Hypergraph> {
        if t < self.r + 1 || self.n > t {
            return Err(HgError::InvalidArgument(format!(
                "normalization needs G on [t] with t > r, got t = {t}, n = {}",
                self.n
            )));
        }
        let forbidden = RSet::of(
            &((t - self.r) as u32..=(t - 1) as u32).collect::<Vec<_>>(),
        );
        // precondition: G must not contain the full clique on [t-1]
        let clique_size = binomial((t - 1) as u64, self.r as u64);
        let in_clique = self
            .edges
            .iter()
            .filter(|e| e.max_label() as usize <= t - 1)
            .count();
        if in_clique as u64 == clique_size {
            return Err(HgError::PreconditionViolation(
                "graph contains the complete r-graph on [t-1]".into(),
            ));
        }

        let mut g = self.with_vertex_count(t)?;

        // step 1: evict (t-r)...(t-1) for the lowest missing r-set of [t-1]
        if g.contains_edge(&forbidden) {
            let replacement = (0..clique_size)
                .map(|k| colex_unrank(self.r, k))
                .find(|s| s.max_label() as usize <= t - 1 && !g.contains_edge(s))
                .expect("clique on [t-1] is not full");
            g = g.replace_edge(&forbidden, &replacement)?;
        }

        // step 2: push edges down the descendant order
        loop {
            let mut step: Option<(RSet, RSet)> = None;
            // highest-colex edge first, for a deterministic trace
            for e in g.edges.iter().rev() {
                let mut missing: Vec<RSet> = Hypergraph::descendants_of(e)
                    .into_iter()
                    .filter(|d| *d != forbidden && !g.contains_edge(d))
                    .collect();
                if missing.is_empty() {
                    continue;
                }
                missing.sort_by_key(|d| (d.sum(), colex_rank(d)));
                step = Some((e.clone(), missing.swap_remove(0)));
                break;
            }
            match step {
                Some((e, d)) => g = g.replace_edge(&e, &d)?,
                None => break,
            }
        }
        Ok(g)
    }

    fn replace_edge(&self, old: &RSet, new: &RSet) -> Result<Hypergraph> {
        let mut edges: Vec<RSet> = self
            .edges
            .iter()
            .filter(|e| *e != old)
            .cloned()
            .collect();
        edges.push(new.clone());
        Hypergraph::new(self.r, self.n, edges)
    }
}

/// C_{r,m}: the first m r-sets in colex order. With m = 0 the graph is
/// empty on r vertices.
pub fn make_colex_graph(r: usize, m: u64) -> Result<Hypergraph> {
    let edges: Vec<RSet> = (0..m).map(|k| colex_unrank(r, k)).collect();
    let n = edges
        .iter()
        .map(|e| e.max_label() as usize)
        .max()
        .unwrap_or(r);
    Hypergraph::new(r, n, edges)
}

/// The complete r-graph [t]^{(r)}.
pub fn make_complete(t: usize, r: usize) -> Result<Hypergraph> {
    if t < r {
        return Err(HgError::InvalidArgument(format!(
            "complete graph needs t >= r, got t = {t}, r = {r}"
        )));
    }
    make_colex_graph(r, binomial(t as u64, r as u64))?.with_vertex_count(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(labels: &[u32]) -> RSet {
        RSet::of(labels)
    }

    #[test]
    fn colex_graph_examples() {
        let g = make_colex_graph(3, 4).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(
            g.edges(),
            &[rs(&[1, 2, 3]), rs(&[1, 2, 4]), rs(&[1, 3, 4]), rs(&[2, 3, 4])]
        );
        let g5 = make_colex_graph(3, 5).unwrap();
        assert_eq!(g5.n(), 5);
        assert!(g5.contains_edge(&rs(&[1, 2, 5])));
        let tri = make_colex_graph(2, 3).unwrap();
        assert_eq!(tri.edges(), &[rs(&[1, 2]), rs(&[1, 3]), rs(&[2, 3])]);
        let empty = make_colex_graph(3, 0).unwrap();
        assert_eq!(empty.n(), 3);
        assert_eq!(empty.edge_count(), 0);
    }

    #[test]
    fn complete_examples() {
        assert_eq!(make_complete(4, 3).unwrap().edge_count(), 4);
        assert_eq!(make_complete(5, 3).unwrap().edge_count(), 10);
        let tri = make_complete(3, 2).unwrap();
        assert_eq!(tri.edges(), &[rs(&[1, 2]), rs(&[1, 3]), rs(&[2, 3])]);
        assert!(make_complete(2, 3).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        let tri = make_complete(3, 2).unwrap();
        assert_eq!(tri.link(1).unwrap(), vec![rs(&[2]), rs(&[3])]);

        let k4 = make_complete(4, 3).unwrap();
        assert_eq!(k4.pair_link(1, 2).unwrap(), vec![rs(&[3]), rs(&[4])]);

        // strict complement semantics: sets containing the other vertex are
        // outside E_j^c, and sets whose j-extension is an edge are excluded
        let g = Hypergraph::new(
            3,
            4,
            vec![rs(&[1, 2, 3]), rs(&[1, 2, 4]), rs(&[1, 3, 4])],
        )
        .unwrap();
        assert_eq!(g.link(3).unwrap(), vec![rs(&[1, 2]), rs(&[1, 4])]);
        assert_eq!(g.link(4).unwrap(), vec![rs(&[1, 2]), rs(&[1, 3])]);
        assert_eq!(g.link_difference(3, 4).unwrap(), Vec::<RSet>::new());
        assert_eq!(g.link_difference(4, 3).unwrap(), Vec::<RSet>::new());
        assert!(g.link(5).is_err());
    }

    #[test]
    fn left_compressed_examples() {
        assert!(make_colex_graph(3, 5).unwrap().is_left_compressed());
        assert!(make_complete(6, 3).unwrap().is_left_compressed());
        let g = Hypergraph::new(3, 4, vec![rs(&[1, 2, 4])]).unwrap();
        assert!(!g.is_left_compressed());
    }

    #[test]
    fn compress_examples() {
        let g = Hypergraph::new(3, 4, vec![rs(&[2, 3, 4])]).unwrap();
        assert_eq!(g.compress(1, 2).unwrap().edges(), &[rs(&[1, 3, 4])]);

        let g = Hypergraph::new(3, 4, vec![rs(&[1, 3, 4]), rs(&[2, 3, 4])]).unwrap();
        let h = g.compress(1, 2).unwrap();
        assert_eq!(h, g); // image of 234 already present, retained

        let g = Hypergraph::new(3, 4, vec![rs(&[1, 2, 3])]).unwrap();
        assert_eq!(g.compress(1, 4).unwrap(), g);
    }

    #[test]
    fn fixpoint_is_left_compressed() {
        let g = Hypergraph::new(
            3,
            5,
            vec![rs(&[2, 4, 5]), rs(&[1, 3, 5]), rs(&[2, 3, 4])],
        )
        .unwrap();
        let h = g.compress_to_fixpoint();
        assert!(h.is_left_compressed());
        assert_eq!(h.edge_count(), g.edge_count());
    }

    #[test]
    fn normalize_examples() {
        // single edge 125 on [5] collapses to 123
        let g = Hypergraph::new(3, 5, vec![rs(&[1, 2, 5])]).unwrap();
        let h = g.normalize_left_compressed(5).unwrap();
        assert_eq!(h.edges(), &[rs(&[1, 2, 3])]);

        // C_{3,4} with 234 swapped for 235: two-step trace ends at
        // {123,124,134,125}
        let g = Hypergraph::new(
            3,
            5,
            vec![rs(&[1, 2, 3]), rs(&[1, 2, 4]), rs(&[1, 3, 4]), rs(&[2, 3, 5])],
        )
        .unwrap();
        let h = g.normalize_left_compressed(5).unwrap();
        assert_eq!(h.edge_count(), 4);
        for e in [&[1u32, 2, 3][..], &[1, 2, 4], &[1, 3, 4], &[1, 2, 5]] {
            assert!(h.contains_edge(&rs(e)), "missing {e:?}");
        }
        assert!(!h.contains_edge(&rs(&[2, 3, 4])));

        // precondition: containing [t-1]^{(r)} is rejected
        let full = make_complete(4, 3).unwrap().with_vertex_count(5).unwrap();
        assert!(matches!(
            full.normalize_left_compressed(5),
            Err(HgError::PreconditionViolation(_))
        ));
    }

    #[test]
    fn normalize_already_closed_is_identity() {
        // [t-1]^{(r)} minus its top edge (t-r)...(t-1) is descendant-closed
        let t = 5;
        let mut edges = make_complete(4, 3).unwrap().edges().to_vec();
        edges.retain(|e| *e != rs(&[2, 3, 4]));
        let g = Hypergraph::new(3, t, edges.clone()).unwrap();
        let h = g.normalize_left_compressed(t).unwrap();
        assert_eq!(h.edges(), &edges[..]);
    }

    #[test]
    fn text_format_round_trip() {
        let g = make_colex_graph(3, 5).unwrap();
        let line = g.to_line();
        assert_eq!(
            line,
            r#"{"r":3,"n":5,"edges":[[1,2,3],[1,2,4],[1,3,4],[2,3,4],[1,2,5]]}"#
        );
        let back = Hypergraph::from_line(&line).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_line(), line);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert!(Hypergraph::new(3, 3, vec![rs(&[1, 2, 4])]).is_err());
        assert!(Hypergraph::new(3, 4, vec![rs(&[1, 2])]).is_err());
        assert!(
            Hypergraph::new(3, 4, vec![rs(&[1, 2, 3]), rs(&[3, 2, 1])]).is_err()
        );
    }
}
