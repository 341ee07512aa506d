//! The Lagrangian polynomial over the standard simplex: evaluation, the
//! multiplicative growth update, restart-based maximization with support
//! pruning, optimality residuals, and an exhaustive small-n oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::distributions::Distribution;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::binom::binomial;
use crate::error::{HgError, Result};
use crate::hypergraph::Hypergraph;
use crate::rset::RSet;

/// A point of the standard simplex: nonnegative entries with unit sum.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Weighting(Vec<f64>);

impl Weighting {
    /// Validates nonnegativity and normalizes the sum to 1. Errors when the
    /// sum is not positive.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.iter().any(|&v| v < 0.0 || !v.is_finite()) {
            return Err(HgError::InvalidArgument(
                "weights must be finite and nonnegative".into(),
            ));
        }
        let sum: f64 = values.iter().sum();
        if sum <= 0.0 {
            return Err(HgError::InvalidArgument("weights sum to zero".into()));
        }
        let mut values = values;
        if (sum - 1.0).abs() > 1e-15 {
            for v in &mut values {
                *v /= sum;
            }
        }
        Ok(Weighting(values))
    }

    pub fn uniform(n: usize) -> Self {
        Weighting(vec![1.0 / n as f64; n])
    }

    /// Uniform over a vertex subset (1-based labels), zero elsewhere.
    pub fn uniform_on(support: &[u32], n: usize) -> Self {
        let mut values = vec![0.0; n];
        for &v in support {
            values[v as usize - 1] = 1.0 / support.len() as f64;
        }
        Weighting(values)
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Vertices with weight above `threshold` (1-based).
    pub fn support(&self, threshold: f64) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > threshold)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }
}

/// Sum over the given sets of the product of coordinate weights. The empty
/// set contributes 1, so for 0-uniform set families this counts sets.
pub fn poly_value(sets: &[RSet], x: &[f64]) -> f64 {
    sets.iter()
        .map(|s| {
            s.elements()
                .iter()
                .map(|&v| x[v as usize - 1])
                .product::<f64>()
        })
        .sum()
}

/// lambda(G, x): the edge-product polynomial at x.
pub fn evaluate(g: &Hypergraph, x: &Weighting) -> Result<f64> {
    if x.len() != g.n() {
        return Err(HgError::InvalidArgument(format!(
            "weighting has length {}, graph has {} vertices",
            x.len(),
            g.n()
        )));
    }
    Ok(poly_value(g.edges(), x.values()))
}

/// lambda(E_i, x): the link polynomial of vertex i, i.e. the partial
/// derivative of the objective in coordinate i.
pub fn link_value(g: &Hypergraph, i: u32, x: &Weighting) -> Result<f64> {
    if x.len() != g.n() {
        return Err(HgError::InvalidArgument("weighting length mismatch".into()));
    }
    Ok(poly_value(&g.link(i)?, x.values()))
}

/// One multiplicative growth update: x_i <- x_i * lambda(E_i, x) / (r * lambda).
/// Monotone for this nonnegative-coefficient homogeneous objective.
pub fn growth_step(g: &Hypergraph, x: &Weighting) -> Result<Weighting> {
    let lambda = evaluate(g, x)?;
    if lambda <= 0.0 {
        return Err(HgError::DegenerateStart);
    }
    let scale = g.r() as f64 * lambda;
    let values = (1..=g.n() as u32)
        .map(|i| Ok(x.values()[i as usize - 1] * link_value(g, i, x)? / scale))
        .collect::<Result<Vec<f64>>>()?;
    Weighting::new(values)
}

/// Solver knobs. A fixed seed makes the whole run deterministic.
#[derive(Debug, Clone)]
pub struct SolverOptions {
    pub max_iterations: usize,
    pub convergence_tolerance: f64,
    pub restarts: usize,
    pub support_threshold: f64,
    pub seed: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            max_iterations: 5000,
            convergence_tolerance: 1e-13,
            restarts: 16,
            support_threshold: 1e-9,
            seed: 0,
        }
    }
}

/// Outcome of a maximization run. Every reported lambda is re-checkable:
/// it equals evaluate(G, weighting) by construction.
#[derive(Debug, Clone, Serialize)]
pub struct OptResult {
    #[serde(rename = "lambda")]
    pub lambda_value: f64,
    #[serde(rename = "weights")]
    pub weighting: Weighting,
    pub support: Vec<u32>,
    #[serde(rename = "kkt")]
    pub kkt_residual: f64,
    #[serde(rename = "iters")]
    pub iterations: usize,
    pub converged: bool,
    #[serde(skip)]
    pub pair_cover_ok: bool,
    #[serde(skip)]
    pub restarts_used: usize,
}

impl OptResult {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("result serializes")
    }
}

struct Run {
    weighting: Weighting,
    lambda: f64,
    iterations: usize,
    converged: bool,
}

/// Iterates growth steps until the objective stalls.
fn converge(g: &Hypergraph, start: Weighting, opts: &SolverOptions) -> Result<Run> {
    let mut x = start;
    let mut lambda = evaluate(g, &x)?;
    if lambda <= 0.0 {
        return Err(HgError::DegenerateStart);
    }
    let mut converged = false;
    let mut iterations = 0;
    while iterations < opts.max_iterations {
        let next = growth_step(g, &x)?;
        let next_lambda = evaluate(g, &next)?;
        iterations += 1;
        let stalled = (next_lambda - lambda).abs() <= opts.convergence_tolerance;
        x = next;
        lambda = next_lambda;
        if stalled {
            converged = true;
            break;
        }
    }
    Ok(Run {
        weighting: x,
        lambda,
        iterations,
        converged,
    })
}

/// Zeroes coordinates below the threshold and renormalizes; None when the
/// whole vector would vanish.
fn pruned(x: &Weighting, threshold: f64) -> Option<Weighting> {
    let values: Vec<f64> = x
        .values()
        .iter()
        .map(|&w| if w > threshold { w } else { 0.0 })
        .collect();
    Weighting::new(values).ok()
}

fn dirichlet_start(n: usize, rng: &mut ChaCha8Rng) -> Weighting {
    // symmetric Dirichlet(1) via exponential spacings
    let exp = rand::distributions::Uniform::new(f64::MIN_POSITIVE, 1.0f64);
    let values: Vec<f64> = (0..n).map(|_| -exp.sample(rng).ln()).collect();
    Weighting::new(values).expect("positive start")
}

const TIE_EPS: f64 = 1e-10;

/// True when `a` should be preferred over `b`: larger lambda, then smaller
/// support, then the lexicographically larger sorted weight sequence.
fn better(a: &Run, b: &Run, threshold: f64) -> bool {
    if a.lambda > b.lambda + TIE_EPS {
        return true;
    }
    if b.lambda > a.lambda + TIE_EPS {
        return false;
    }
    let sa = a.weighting.support(threshold).len();
    let sb = b.weighting.support(threshold).len();
    if sa != sb {
        return sa < sb;
    }
    let mut wa: Vec<f64> = a.weighting.values().to_vec();
    let mut wb: Vec<f64> = b.weighting.values().to_vec();
    wa.sort_by(|p, q| q.partial_cmp(p).unwrap());
    wb.sort_by(|p, q| q.partial_cmp(p).unwrap());
    for (p, q) in wa.iter().zip(&wb) {
        if (p - q).abs() > TIE_EPS {
            return p > q;
        }
    }
    false
}

/// Estimates lambda(G) by iterated growth steps from the uniform weighting,
/// `opts.restarts` random simplex starts, and any caller-provided starts,
/// followed by support pruning toward a minimal-support optimum.
pub fn maximize_seeded(
    g: &Hypergraph,
    opts: &SolverOptions,
    extra_starts: &[Weighting],
) -> Result<OptResult> {
    let n = g.n();
    if g.edge_count() == 0 {
        let weighting = Weighting::uniform_on(&[1], n);
        return Ok(OptResult {
            lambda_value: 0.0,
            support: weighting.support(opts.support_threshold),
            weighting,
            kkt_residual: 0.0,
            iterations: 0,
            converged: true,
            pair_cover_ok: true,
            restarts_used: 0,
        });
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut starts = vec![Weighting::uniform(n)];
    starts.extend(extra_starts.iter().cloned());
    for _ in 0..opts.restarts {
        starts.push(dirichlet_start(n, &mut rng));
    }

    let mut best: Option<Run> = None;
    let restarts_used = starts.len();
    for mut start in starts {
        if evaluate(g, &start)? <= 0.0 {
            // degenerate start: restart uniform on a random edge
            let edge = &g.edges()[rng.gen_range(0..g.edge_count())];
            start = Weighting::uniform_on(edge.elements(), n);
        }
        let mut run = converge(g, start, opts)?;

        // drop numerically-zero coordinates, then re-converge
        if let Some(px) = pruned(&run.weighting, opts.support_threshold) {
            if px != run.weighting {
                if let Ok(mut rerun) = converge(g, px, opts) {
                    rerun.iterations += run.iterations;
                    if rerun.lambda >= run.lambda - TIE_EPS {
                        run = rerun;
                    }
                }
            }
        }

        // support-minimality pruning: keep zeroing the smallest positive
        // weight while the objective does not drop
        loop {
            let support = run.weighting.support(opts.support_threshold);
            if support.len() <= 1 {
                break;
            }
            let &victim = support
                .iter()
                .min_by(|&&a, &&b| {
                    let wa = run.weighting.values()[a as usize - 1];
                    let wb = run.weighting.values()[b as usize - 1];
                    wa.partial_cmp(&wb).unwrap().then(b.cmp(&a))
                })
                .expect("nonempty support");
            let mut values = run.weighting.values().to_vec();
            values[victim as usize - 1] = 0.0;
            let Ok(candidate) = Weighting::new(values) else {
                break;
            };
            match converge(g, candidate, opts) {
                Ok(mut rerun) if rerun.lambda >= run.lambda - TIE_EPS => {
                    rerun.iterations += run.iterations;
                    run = rerun;
                }
                _ => break,
            }
        }

        best = match best {
            Some(b) if better(&b, &run, opts.support_threshold) => Some(b),
            _ => Some(run),
        };
    }

    let best = best.expect("at least one start");
    let weighting = pruned(&best.weighting, opts.support_threshold)
        .unwrap_or_else(|| best.weighting.clone());
    let lambda_value = evaluate(g, &weighting)?;
    let support = weighting.support(opts.support_threshold);
    let r_lambda = g.r() as f64 * lambda_value;
    let kkt_residual = support
        .iter()
        .map(|&i| (link_value(g, i, &weighting).unwrap() - r_lambda).abs())
        .fold(0.0f64, f64::max);
    let pair_cover_ok = support.iter().enumerate().all(|(idx, &i)| {
        support[idx + 1..]
            .iter()
            .all(|&j| g.edges().iter().any(|e| e.contains(i) && e.contains(j)))
    });

    Ok(OptResult {
        lambda_value,
        weighting,
        support,
        kkt_residual,
        iterations: best.iterations,
        converged: best.converged,
        pair_cover_ok,
        restarts_used,
    })
}

/// [`maximize_seeded`] with no caller-provided starts.
pub fn maximize(g: &Hypergraph, opts: &SolverOptions) -> Result<OptResult> {
    maximize_seeded(g, opts, &[])
}

/// lambda([t]^{(r)}) = C(t, r) / t^r as an exact rational.
pub fn complete_lagrangian(t: u64, r: u64) -> Result<BigRational> {
    if t < r {
        return Err(HgError::InvalidArgument(format!(
            "complete Lagrangian needs t >= r, got t = {t}, r = {r}"
        )));
    }
    let numer = BigInt::from(binomial(t, r));
    let mut denom = BigInt::one();
    for _ in 0..r {
        denom *= BigInt::from(t);
    }
    Ok(BigRational::new(numer, denom))
}

pub fn rational_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().expect("rational fits f64")
}

/// Exhaustive oracle: for every nonempty support subset, converge from the
/// uniform start and from every interior simplex grid point of the given
/// resolution, and return the best outcome. Independent of the restart and
/// pruning logic in [`maximize`]. Intended for n <= 8.
pub fn oracle_maximize(g: &Hypergraph, depth: usize) -> Result<OptResult> {
    let n = g.n();
    let opts = SolverOptions {
        restarts: 0,
        ..SolverOptions::default()
    };
    if g.edge_count() == 0 {
        return maximize(g, &opts);
    }

    let mut best: Option<Run> = None;
    let mut consider = |run: Run| {
        best = match best.take() {
            Some(b) if better(&b, &run, opts.support_threshold) => Some(b),
            _ => Some(run),
        };
    };

    for mask in 1u32..(1 << n) {
        let support: Vec<u32> = (0..n as u32)
            .filter(|b| mask & (1 << b) != 0)
            .map(|b| b + 1)
            .collect();
        let mut starts = vec![Weighting::uniform_on(&support, n)];
        if support.len() >= 2 && depth >= support.len() {
            push_grid_starts(&support, n, depth, &mut starts);
        }
        for start in starts {
            if evaluate(g, &start)? <= 0.0 {
                continue;
            }
            consider(converge(g, start, &opts)?);
        }
    }

    let best = best.ok_or(HgError::DegenerateStart)?;
    let weighting = pruned(&best.weighting, opts.support_threshold)
        .unwrap_or_else(|| best.weighting.clone());
    let lambda_value = evaluate(g, &weighting)?;
    let support = weighting.support(opts.support_threshold);
    let r_lambda = g.r() as f64 * lambda_value;
    let kkt_residual = support
        .iter()
        .map(|&i| (link_value(g, i, &weighting).unwrap() - r_lambda).abs())
        .fold(0.0f64, f64::max);
    let pair_cover_ok = support.iter().enumerate().all(|(idx, &i)| {
        support[idx + 1..]
            .iter()
            .all(|&j| g.edges().iter().any(|e| e.contains(i) && e.contains(j)))
    });
    Ok(OptResult {
        lambda_value,
        weighting,
        support,
        kkt_residual,
        iterations: best.iterations,
        converged: best.converged,
        pair_cover_ok,
        restarts_used: 0,
    })
}

/// Interior grid points on the simplex over `support`: positive integer
/// compositions of `depth` scaled by 1/depth.
fn push_grid_starts(support: &[u32], n: usize, depth: usize, out: &mut Vec<Weighting>) {
    let k = support.len();
    let mut parts = vec![1usize; k];
    fn rec(
        parts: &mut Vec<usize>,
        pos: usize,
        left: usize,
        support: &[u32],
        n: usize,
        depth: usize,
        out: &mut Vec<Weighting>,
    ) {
        if pos == parts.len() - 1 {
            parts[pos] = left;
            let mut values = vec![0.0; n];
            for (p, &v) in parts.iter().zip(support) {
                values[v as usize - 1] = *p as f64 / depth as f64;
            }
            out.push(Weighting::new(values).expect("grid point"));
            return;
        }
        let reserve = parts.len() - 1 - pos;
        for p in 1..=(left - reserve) {
            parts[pos] = p;
            rec(parts, pos + 1, left - p, support, n, depth, out);
        }
    }
    rec(&mut parts, 0, depth, support, n, depth, out);
}

/// Remark-style residual for left-compressed graphs at a (near-)optimal
/// weighting: checks x_i - x_j against lambda(E_{i\j}, x) / lambda(E_ij, x)
/// over support pairs, and folds any violation of the descending weight
/// ordering into the returned residual.
pub fn remark_gap_check(g: &Hypergraph, x: &Weighting, tol: f64) -> Result<f64> {
    if !g.is_left_compressed() {
        return Err(HgError::PreconditionViolation(
            "remark gap check requires a left-compressed graph".into(),
        ));
    }
    if x.len() != g.n() {
        return Err(HgError::InvalidArgument("weighting length mismatch".into()));
    }
    let support = x.support(1e-12);
    let mut residual = 0.0f64;
    // ordering x_1 >= x_2 >= ... must hold for left-compressed optima
    for w in x.values().windows(2) {
        if w[1] > w[0] + tol {
            residual = residual.max(w[1] - w[0]);
        }
    }
    for (idx, &i) in support.iter().enumerate() {
        for &j in &support[idx + 1..] {
            let pair = poly_value(&g.pair_link(i, j)?, x.values());
            if pair <= tol {
                continue;
            }
            let diff_poly = poly_value(&g.link_difference(i, j)?, x.values());
            let xi = x.values()[i as usize - 1];
            let xj = x.values()[j as usize - 1];
            residual = residual.max(((xi - xj) - diff_poly / pair).abs());
        }
    }
    Ok(residual)
}
