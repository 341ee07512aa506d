//! Verification campaigns: exhaustive or randomized sweeps that compare
//! computed Lagrangians against closed-form references and clique-based
//! predictions, producing deterministic record streams.

use std::time::Instant;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::binom::{big_binomial, binomial};
use crate::clique::{max_clique_order, CliqueResult};
use crate::error::{HgError, Result};
use crate::hypergraph::{make_colex_graph, make_complete, Hypergraph};
use crate::lab::enumerate::{canonical_signature, enumerate_graphs};
use crate::lab::report::{Campaign, VerificationRecord};
use crate::lab::mix_seed;
use crate::lagrangian::{
    maximize_seeded, rational_to_f64, complete_lagrangian, OptResult, SolverOptions, Weighting,
};
use crate::rset::colex_unrank;

/// Floating point cannot certify a strict inequality; strict checks assert
/// reference - lambda >= this margin and report the achieved slack.
pub const STRICTNESS_MARGIN: f64 = 1e-9;

/// Solves with the uniform-on-max-clique start added to the restart
/// schedule; the clique witness pins the clique-side optimum exactly.
fn seeded_solve(
    g: &Hypergraph,
    opts: &SolverOptions,
    seed: u64,
    extra: &[Weighting],
) -> Result<(OptResult, CliqueResult)> {
    let clique = max_clique_order(g);
    let mut starts = extra.to_vec();
    if !clique.witness.is_empty() {
        starts.push(Weighting::uniform_on(&clique.witness, g.n()));
    }
    let per_instance = SolverOptions {
        seed,
        ..opts.clone()
    };
    Ok((maximize_seeded(g, &per_instance, &starts)?, clique))
}

/// Motzkin-Straus sweep: every 2-graph with at least one edge on [n_max]
/// (up to isomorphism) must have lambda = (1/2)(1 - 1/omega) within tol.
pub fn verify_motzkin_straus(
    n_max: usize,
    tol: f64,
    opts: &SolverOptions,
) -> Result<Campaign> {
    if !(2..=7).contains(&n_max) {
        return Err(HgError::InvalidArgument(format!(
            "exhaustive tier needs 2 <= n_max <= 7, got {n_max}"
        )));
    }
    let started = Instant::now();
    let mut instances = Vec::new();
    for m in 1..=binomial(n_max as u64, 2) as usize {
        instances.extend(enumerate_graphs(2, n_max, m, true)?);
    }
    let records: Vec<VerificationRecord> = instances
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let t0 = Instant::now();
            let (res, clique) =
                seeded_solve(g, opts, mix_seed(opts.seed, idx as u64), &[])?;
            let omega = clique.order as f64;
            let reference = 0.5 * (1.0 - 1.0 / omega);
            let deviation = (res.lambda_value - reference).abs();
            Ok(VerificationRecord {
                campaign: "motzkin-straus".into(),
                instance: VerificationRecord::describe(g),
                r: 2,
                n: g.n(),
                m: g.edge_count(),
                lambda: res.lambda_value,
                reference,
                clique_order: Some(clique.order),
                pass: deviation <= tol,
                tol,
                margin: tol - deviation,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Campaign::assemble(
        "motzkin-straus",
        None,
        records,
        opts.seed,
        started.elapsed().as_secs_f64() * 1e3,
    ))
}

/// Colex plateau: lambda(C_{r,m}) stays at lambda([t-1]^{(r)}) for every m
/// in [C(t-1,r), C(t-1,r) + C(t-2,r-1)].
pub fn verify_colex_plateau(r: usize, t: usize, tol: f64, opts: &SolverOptions) -> Result<Campaign> {
    if r < 2 || t < r + 1 {
        return Err(HgError::InvalidArgument(format!(
            "plateau campaign needs r >= 2 and t >= r + 1, got r = {r}, t = {t}"
        )));
    }
    let started = Instant::now();
    let reference = rational_to_f64(&complete_lagrangian(t as u64 - 1, r as u64)?);
    let m_lo = binomial(t as u64 - 1, r as u64);
    let m_hi = m_lo + binomial(t as u64 - 2, r as u64 - 1);
    let witness: Vec<u32> = (1..t as u32).collect();
    let records: Vec<VerificationRecord> = (m_lo..=m_hi)
        .collect::<Vec<_>>()
        .par_iter()
        .enumerate()
        .map(|(idx, &m)| {
            let t0 = Instant::now();
            let g = make_colex_graph(r, m)?;
            let start = Weighting::uniform_on(&witness, g.n());
            let per_instance = SolverOptions {
                seed: mix_seed(opts.seed, idx as u64),
                ..opts.clone()
            };
            let res = maximize_seeded(&g, &per_instance, &[start])?;
            let deviation = (res.lambda_value - reference).abs();
            Ok(VerificationRecord {
                campaign: "colex-plateau".into(),
                instance: VerificationRecord::describe(&g),
                r,
                n: g.n(),
                m: m as usize,
                lambda: res.lambda_value,
                reference,
                clique_order: None,
                pass: deviation <= tol,
                tol,
                margin: tol - deviation,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Campaign::assemble(
        "colex-plateau",
        None,
        records,
        opts.seed,
        started.elapsed().as_secs_f64() * 1e3,
    ))
}

/// Largest-Lagrangian sweep: no m-edge r-graph on [n] may beat C_{r,m},
/// and C_{r,m} itself must attain the maximum.
pub fn verify_frankl_furedi(
    r: usize,
    n: usize,
    m: usize,
    tol: f64,
    budget: u64,
    opts: &SolverOptions,
) -> Result<Campaign> {
    let total = big_binomial(binomial(n as u64, r as u64), m as u64);
    if total > BigInt::from(budget) {
        let required = u64::try_from(total.clone()).unwrap_or(u64::MAX);
        return Err(HgError::BudgetExceeded { budget, required });
    }
    let started = Instant::now();

    let colex = make_colex_graph(r, m as u64)?;
    let (colex_res, _) = seeded_solve(&colex, opts, opts.seed, &[])?;
    let reference = colex_res.lambda_value;

    let instances = enumerate_graphs(r, n, m, false)?;
    let records: Vec<VerificationRecord> = instances
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let t0 = Instant::now();
            let (res, clique) =
                seeded_solve(g, opts, mix_seed(opts.seed, idx as u64), &[])?;
            let slack = reference + tol - res.lambda_value;
            Ok(VerificationRecord {
                campaign: "frankl-furedi".into(),
                instance: VerificationRecord::describe(g),
                r,
                n,
                m,
                lambda: res.lambda_value,
                reference,
                clique_order: Some(clique.order),
                pass: slack >= 0.0,
                tol,
                margin: slack,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<_>>()?;

    // the maximizer set must contain a copy of C_{r,m}
    let best = records
        .iter()
        .map(|r| r.lambda)
        .fold(f64::NEG_INFINITY, f64::max);
    let colex_attains = reference >= best - tol;
    let iso_check = if n <= 7 && colex.n() <= n {
        let target = canonical_signature(&colex.with_vertex_count(n)?);
        instances
            .iter()
            .zip(&records)
            .filter(|(_, rec)| rec.lambda >= best - tol)
            .any(|(g, _)| canonical_signature(g) == target)
    } else {
        true
    };
    let mut records = records;
    records.push(VerificationRecord {
        campaign: "frankl-furedi".into(),
        instance: "colex-attains-maximum".into(),
        r,
        n,
        m,
        lambda: best,
        reference,
        clique_order: None,
        pass: colex_attains && iso_check,
        tol,
        margin: reference + tol - best,
        wall_ms: 0.0,
    });

    Ok(Campaign::assemble(
        "frankl-furedi",
        None,
        records,
        opts.seed,
        started.elapsed().as_secs_f64() * 1e3,
    ))
}

/// Clique dichotomy on [t]: in the plateau m-range, graphs containing a
/// clique of order t-1 must sit exactly at the reference Lagrangian, and
/// graphs without one must sit strictly below it.
pub fn verify_clique_dichotomy(
    r: usize,
    t: usize,
    tol: f64,
    budget: u64,
    opts: &SolverOptions,
) -> Result<Campaign> {
    if r < 2 || t < r + 1 {
        return Err(HgError::InvalidArgument(format!(
            "dichotomy campaign needs r >= 2 and t >= r + 1, got r = {r}, t = {t}"
        )));
    }
    let m_lo = binomial(t as u64 - 1, r as u64);
    let m_hi = m_lo + binomial(t as u64 - 2, r as u64 - 1);
    let per_r = binomial(t as u64, r as u64);
    let total: BigInt = (m_lo..=m_hi).map(|m| big_binomial(per_r, m)).sum();
    if total > BigInt::from(budget) {
        let required = u64::try_from(total.clone()).unwrap_or(u64::MAX);
        return Err(HgError::BudgetExceeded { budget, required });
    }
    let started = Instant::now();
    let reference = rational_to_f64(&complete_lagrangian(t as u64 - 1, r as u64)?);

    let mut instances = Vec::new();
    for m in m_lo..=m_hi {
        instances.extend(enumerate_graphs(r, t, m as usize, false)?);
    }
    let records: Vec<VerificationRecord> = instances
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let t0 = Instant::now();
            let (res, clique) =
                seeded_solve(g, opts, mix_seed(opts.seed, idx as u64), &[])?;
            let has_clique = clique.order >= t - 1;
            let (pass, margin) = if has_clique {
                let deviation = (res.lambda_value - reference).abs();
                (deviation <= tol, tol - deviation)
            } else {
                let slack = (reference - res.lambda_value) - STRICTNESS_MARGIN;
                (slack >= 0.0, slack)
            };
            Ok(VerificationRecord {
                campaign: "clique-dichotomy".into(),
                instance: VerificationRecord::describe(g),
                r,
                n: t,
                m: g.edge_count(),
                lambda: res.lambda_value,
                reference,
                clique_order: Some(clique.order),
                pass,
                tol,
                margin,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<_>>()?;

    let note = format!(
        "small-(r,t) analogue: the native range of the clique dichotomy for r >= 4 \
         (first nonempty at t = 55 when r = 4) is not enumerable at desk scale; \
         this campaign substitutes the exhaustive (r={r}, t={t}) property and exact \
         bound arithmetic for it"
    );
    Ok(Campaign::assemble(
        "clique-dichotomy",
        Some(note),
        records,
        opts.seed,
        started.elapsed().as_secs_f64() * 1e3,
    ))
}

/// Randomized corpus for the compression-monotonicity campaign.
#[derive(Debug, Clone)]
pub struct CorpusSpec {
    pub count: usize,
    pub r_min: usize,
    pub r_max: usize,
    pub n_max: usize,
    pub max_edges: usize,
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 500,
            r_min: 2,
            r_max: 4,
            n_max: 7,
            max_edges: 10,
            seed: 0,
        }
    }
}

pub fn random_corpus(spec: &CorpusSpec) -> Result<Vec<Hypergraph>> {
    if spec.r_min < 2 || spec.r_max < spec.r_min || spec.n_max <= spec.r_max {
        return Err(HgError::InvalidArgument("corpus ranges are empty".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let r = rng.gen_range(spec.r_min..=spec.r_max);
        let n = rng.gen_range(r + 1..=spec.n_max);
        let pool = make_complete(n, r)?.edges().to_vec();
        let m = rng.gen_range(1..=pool.len().min(spec.max_edges));
        let picks = rand::seq::index::sample(&mut rng, pool.len(), m);
        let edges = picks.iter().map(|i| pool[i].clone()).collect();
        out.push(Hypergraph::new(r, n, edges)?);
    }
    Ok(out)
}

/// Single compression steps (and the full fixpoint) never decrease the
/// Lagrangian beyond tol: the operational content of the existence of a
/// left-compressed extremal graph.
pub fn verify_compression_monotone(
    corpus: &CorpusSpec,
    tol: f64,
    opts: &SolverOptions,
) -> Result<Campaign> {
    let started = Instant::now();
    let graphs = random_corpus(corpus)?;
    let records: Vec<VerificationRecord> = graphs
        .par_iter()
        .enumerate()
        .map(|(idx, g)| {
            let t0 = Instant::now();
            let seed = mix_seed(opts.seed, idx as u64);
            let (base, _) = seeded_solve(g, opts, seed, &[])?;
            // reusing the base optimum (and its descending rearrangement)
            // as starts keeps the compressed solve from under-shooting
            let mut sorted = base.weighting.values().to_vec();
            sorted.sort_by(|a, b| b.partial_cmp(a).unwrap());
            let carry = [
                base.weighting.clone(),
                Weighting::new(sorted).unwrap_or_else(|_| base.weighting.clone()),
            ];

            let mut worst = f64::INFINITY;
            let mut targets: Vec<Hypergraph> = Vec::new();
            for j in 2..=g.n() as u32 {
                for i in 1..j {
                    let h = g.compress(i, j)?;
                    if h != *g {
                        targets.push(h);
                    }
                }
            }
            targets.push(g.compress_to_fixpoint());
            for (step, h) in targets.iter().enumerate() {
                let (res, _) =
                    seeded_solve(h, opts, mix_seed(seed, step as u64 + 1), &carry)?;
                worst = worst.min(res.lambda_value - base.lambda_value + tol);
            }
            if targets.is_empty() {
                worst = tol; // already left-compressed: identity, difference 0
            }
            Ok(VerificationRecord {
                campaign: "compression-monotone".into(),
                instance: VerificationRecord::describe(g),
                r: g.r(),
                n: g.n(),
                m: g.edge_count(),
                lambda: base.lambda_value,
                reference: base.lambda_value,
                clique_order: None,
                pass: worst >= 0.0,
                tol,
                margin: worst,
                wall_ms: t0.elapsed().as_secs_f64() * 1e3,
            })
        })
        .collect::<Result<_>>()?;
    Ok(Campaign::assemble(
        "compression-monotone",
        None,
        records,
        corpus.seed,
        started.elapsed().as_secs_f64() * 1e3,
    ))
}

/// Diagnostic for the neighborhood-count dichotomies: either the window
/// [t-2r+6] is nearly saturated (counts bounded by 2^{r-1} |E_{(t-1)t}|)
/// or the Lagrangian sits strictly below the complete-graph reference.
#[derive(Debug, Clone, Serialize)]
pub struct NeighborhoodDiagnostic {
    pub r: usize,
    pub t: usize,
    pub window: usize,
    pub missing_links: u64,
    pub missing_edges: u64,
    pub pair_link_bound: u64,
    pub lambda: f64,
    pub reference: f64,
    pub strict_margin: f64,
    pub link_count_ok: bool,
    pub edge_count_ok: bool,
    pub lambda_strictly_below: bool,
    pub link_dichotomy_holds: bool,
    pub edge_dichotomy_holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precondition_violation: Option<String>,
}

pub fn check_neighborhood_dichotomy(
    g: &Hypergraph,
    t: usize,
    tol: f64,
    opts: &SolverOptions,
) -> Result<NeighborhoodDiagnostic> {
    let r = g.r();
    if g.n() > t {
        return Err(HgError::InvalidArgument(format!(
            "graph has {} vertices, exceeds t = {t}",
            g.n()
        )));
    }
    if t + 6 < 2 * r + 1 {
        return Err(HgError::InvalidArgument(format!(
            "window index t - 2r + 6 must be a valid vertex, got t = {t}, r = {r}"
        )));
    }
    let g = g.with_vertex_count(t)?;

    let mut violation = None;
    if !g.is_left_compressed() {
        violation = Some("graph is not left-compressed".to_string());
    } else {
        let clique_size = binomial(t as u64 - 1, r as u64);
        let in_clique = g
            .edges()
            .iter()
            .filter(|e| e.max_label() as usize <= t - 1)
            .count() as u64;
        if in_clique == clique_size {
            violation = Some("graph contains the complete r-graph on [t-1]".to_string());
        }
    }

    let window = t + 6 - 2 * r;
    let count_missing = |k: usize, present: &dyn Fn(&crate::rset::RSet) -> bool| -> u64 {
        if k > window {
            return 0;
        }
        (0..binomial(window as u64, k as u64))
            .map(|rank| colex_unrank(k, rank))
            .filter(|s| s.max_label() as usize <= window && !present(s))
            .count() as u64
    };
    let link = g.link(t as u32 - 1)?;
    let missing_links = count_missing(r - 1, &|s| link.contains(s));
    let missing_edges = count_missing(r, &|s| g.contains_edge(s));
    let pair_links = g.pair_link(t as u32 - 1, t as u32)?.len() as u64;
    let pair_link_bound = (1u64 << (r - 1)) * pair_links;

    let (res, _) = seeded_solve(&g, opts, opts.seed, &[])?;
    let reference = rational_to_f64(&complete_lagrangian(t as u64 - 1, r as u64)?);
    let strict_margin = (reference - res.lambda_value) - STRICTNESS_MARGIN;
    let lambda_strictly_below = strict_margin >= 0.0;
    let link_count_ok = missing_links <= pair_link_bound;
    let edge_count_ok = missing_edges <= pair_link_bound;

    let _ = tol;
    Ok(NeighborhoodDiagnostic {
        r,
        t,
        window,
        missing_links,
        missing_edges,
        pair_link_bound,
        lambda: res.lambda_value,
        reference,
        strict_margin,
        link_count_ok,
        edge_count_ok,
        lambda_strictly_below,
        link_dichotomy_holds: link_count_ok || lambda_strictly_below,
        edge_dichotomy_holds: edge_count_ok || lambda_strictly_below,
        precondition_violation: violation,
    })
}
