//! Named batches of checks, each producing [`CheckRecord`]s.

use rand::Rng;
use serde_json::json;

use super::*;
use crate::rng::{rng_from_seed, trial_seed};
use crate::Hypergraph;

pub const CHECKS: [&str; 6] = ["formula", "deb", "bins", "chernoff", "density", "bounds"];

/// The `(v, ρ, q)` grid of the Bins check.
pub const BINS_GRID: [(u64, f64, u32); 27] = {
    let vs = [50, 100, 500];
    let rhos = [0.3, 0.5, 0.8];
    let mut out = [(0, 0.0, 0); 27];
    let mut i = 0;
    while i < 27 {
        out[i] = (vs[i / 9], rhos[i / 3 % 3], (i % 3) as u32 + 1);
        i += 1;
    }
    out
};

/// `(n, p, ε, tail)`: three points per tail.
pub fn chernoff_grid() -> Vec<(u64, f64, f64, Tail<f64>)> {
    vec![
        (100, 0.5, 0.2, Tail::Lower),
        (200, 0.1, 0.3, Tail::Lower),
        (1000, 0.05, 0.15, Tail::Lower),
        (100, 0.5, 0.2, Tail::Upper),
        (200, 0.1, 0.3, Tail::Upper),
        (1000, 0.05, 0.15, Tail::Upper),
        (100, 0.05, 0.0, Tail::Multiplicative(3.0)),
        (400, 0.01, 0.0, Tail::Multiplicative(4.0)),
        (50, 0.1, 0.0, Tail::Multiplicative(5.0)),
    ]
}

/// Inequality check at the lower-bound `(β, γ)`, evaluated in 256-bit
/// precision and compared with the closed form `(6ε³ - 6ε²)/(2√2)`.
pub fn formula_report(eps: &[f64]) -> Vec<CheckRecord> {
    use crate::scalar::{relative_difference, Precise, Real};
    eps.iter()
        .map(|&e| {
            let (b, g) = lower_bound_parameters(Precise::from_f64(e), 3);
            let c = formula_holds(b.clone(), g.clone(), 3);
            let closed = formula_gap_closed_form(Precise::from_f64(e));
            let rel = relative_difference(&c.gap(), &closed).to_f64();
            CheckRecord::new(
                "formula",
                json!({"k": 3, "eps": e, "beta": b.to_f64(), "gamma": g.to_f64(), "gap": c.gap().to_f64(),
                       "closed_form_gap": closed.to_f64(), "relative_error": rel}),
                c.lhs.to_f64(),
                c.rhs.to_f64(),
                c.holds,
            )
            .with_note(format!(
                "inequality fails at the lower-bound beta, gamma: LHS - RHS = (6e^3 - 6e^2)/(2 sqrt 2) < 0 \
                 for every 0 < eps < 1, contrary to the claim that it is easily checked (closed form matches to {rel:.1e})"
            ))
        })
        .collect()
}

/// A random composition of a random `n <= 10⁴` into `q <= 50` classes
/// (uniform cut points) with `p <= 0.01`.
pub fn random_composition(seed: u64) -> (Vec<u64>, f64) {
    let mut rng = rng_from_seed(seed);
    let n = rng.random_range(1..=10_000u64);
    let q = rng.random_range(1..=50usize);
    let p = 0.01 * (1.0 - rng.random::<f64>());
    let mut cuts: Vec<u64> = (0..q - 1).map(|_| rng.random_range(0..=n)).collect();
    cuts.sort_unstable();
    let mut sizes = Vec::with_capacity(q);
    let mut prev = 0;
    for c in cuts.into_iter().chain(std::iter::once(n)) {
        sizes.push(c - prev);
        prev = c;
    }
    (sizes, p)
}

pub fn deb_report(count: u64, seed: u64) -> Vec<CheckRecord> {
    let mut violations = 0u64;
    let mut worst = f64::INFINITY;
    let mut first = None;
    for i in 0..count {
        let (sizes, p) = random_composition(trial_seed(seed, i, 0));
        let c = f_lower_bound_check(&sizes, p).expect("valid composition");
        worst = worst.min(c.value / c.bound);
        if !c.holds {
            violations += 1;
            first.get_or_insert(i);
        }
    }
    let mut rec = CheckRecord::new(
        "deb",
        json!({"compositions": count, "seed": seed, "min_ratio": worst, "first_violation": first}),
        violations as f64,
        0.0,
        violations == 0,
    );
    if violations > 0 {
        rec = rec.with_note("f(C) fell below the stated lower bound");
    }
    vec![rec]
}

pub fn bins_report(trials: u64, seed: u64) -> Vec<CheckRecord> {
    BINS_GRID
        .iter()
        .enumerate()
        .map(|(i, &(v, rho, q))| {
            let s = trial_seed(seed, i as u64, 0);
            let c = bins_check(v, rho, q, trials, s).or_else(|_| bins_check_truncated(v, rho, q, trials, s)).expect("valid grid");
            let exact = bins_exact(v, rho, q);
            let rec = CheckRecord::new(
                "bins",
                json!({"v": v, "rho": rho, "q": q, "trials": trials, "zero_mass": c.zero_mass, "exact": exact}),
                c.estimate,
                c.bound,
                c.holds && exact <= c.bound,
            )
            .with_stderr(c.stderr);
            if c.truncated {
                rec.with_note(format!(
                    "P(B = 0) = {:.2e} >= {ZERO_MASS_LIMIT:e}: the expectation is infinite as stated; \
                     estimated over B >= 1 only",
                    c.zero_mass
                ))
            } else {
                rec
            }
        })
        .collect()
}

pub fn chernoff_report(samples: u64, seed: u64) -> Vec<CheckRecord> {
    chernoff_grid()
        .into_iter()
        .enumerate()
        .map(|(i, (n, p, eps, tail))| {
            let c = chernoff_check(n, p, eps, tail, samples, trial_seed(seed, i as u64, 0)).expect("valid grid");
            CheckRecord::new(
                "chernoff",
                json!({"n": n, "p": p, "eps": eps, "tail": c.tail, "threshold": c.threshold, "samples": samples}),
                c.empirical,
                c.bound,
                c.holds,
            )
            .with_stderr(c.stderr)
        })
        .collect()
}

/// L1 at `θ = 3` and L2 at `θ = 1`, each at the largest `σ` its
/// hypothesis allows for `d`.
pub fn density_report(h: &Hypergraph, d: f64, samples: u64, seed: u64) -> Vec<CheckRecord> {
    [(DensityLemma::L1, 3.0), (DensityLemma::L2, 1.0)]
        .into_iter()
        .map(|(lemma, theta)| {
            let base = DensityParams { sigma: 0.0, theta, delta: 0.0, tau: 0.0 };
            let sigma = sigma_max(lemma, d, &base).unwrap_or(0.0);
            let params = DensityParams { sigma, ..base };
            let r = density_predicate_check(h, lemma, params, SearchMode::Sampled { trials: samples, seed })
                .expect("3-uniform input");
            CheckRecord::new(
                "density",
                json!({"lemma": lemma, "n": h.n(), "d": d, "sigma": sigma, "theta": theta,
                       "samples": samples, "seed": seed, "witness": r.violations.first()}),
                r.violation_count as f64,
                0.0,
                r.holds(),
            )
        })
        .collect()
}

pub fn bounds_report(d: f64, k: u32, eps: f64, delta: f64) -> Result<Vec<CheckRecord>, AnalysisError> {
    let b = eval_bounds(d, k, eps, delta)?;
    let ok = b.theta < 0.5 && [b.big_d, b.alpha, b.beta, b.gamma, b.chi_est, b.ub].iter().all(|x| x.is_finite() && *x > 0.0);
    Ok(vec![CheckRecord::new("bounds", serde_json::to_value(&b).expect("plain data"), b.theta, 0.5, ok)])
}
