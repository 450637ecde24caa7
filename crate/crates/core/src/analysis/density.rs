use rand::seq::index::sample;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{domain, AnalysisError};
use crate::bitset::VertexSet;
use crate::rng::{rng_from_seed, trial_seed, GameRng};
use crate::Hypergraph;

/// The four density statements, as predicates on a hypergraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DensityLemma {
    /// No `|S| <= σn` with `e2(S) >= θ|S|`.
    L1,
    /// No `|S| <= σn` with `e3(S) >= θ|S|`.
    L2,
    /// No `T ⊆ S`, `|S| <= σn`, `|T| >= τ|S|` with `d_{S,1}(v) >= Δ` on `T`.
    L3,
    /// As `L3` with `d_{S,2}`.
    L4,
}

impl DensityLemma {
    pub const ALL: [DensityLemma; 4] = [DensityLemma::L1, DensityLemma::L2, DensityLemma::L3, DensityLemma::L4];

    fn index(self) -> u64 {
        self as u64 + 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityParams {
    pub sigma: f64,
    pub theta: f64,
    /// Partial-degree threshold `Δ` (L3, L4 only).
    pub delta: f64,
    pub tau: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    /// Every subset; only for `n <= 15`.
    Exhaustive,
    /// Random sets: half uniform, half grown along edges from a random vertex.
    Sampled { trials: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub set: Vec<u32>,
    /// The largest qualifying `T` (empty for L1 and L2).
    pub t: Vec<u32>,
    /// `e2(S)`, `e3(S)` or `|T|`.
    pub value: f64,
    /// `θ|S|` or `τ|S|`.
    pub threshold: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub lemma: DensityLemma,
    pub params: DensityParams,
    pub mode: SearchMode,
    pub sets_checked: u64,
    pub violation_count: u64,
    /// The first violations found, at most [`DensityReport::KEPT`].
    pub violations: Vec<Violation>,
}

impl DensityReport {
    pub const KEPT: usize = 16;

    pub fn holds(&self) -> bool {
        self.violation_count == 0
    }
}

fn evaluate(h: &Hypergraph, lemma: DensityLemma, p: &DensityParams, members: &[u32]) -> Option<Violation> {
    let s = members.len() as f64;
    match lemma {
        DensityLemma::L1 | DensityLemma::L2 => {
            let stats = h.density_stats(members).expect("validated");
            let value = if lemma == DensityLemma::L1 { stats.e2 } else { stats.e3 } as f64;
            let threshold = p.theta * s;
            (value >= threshold).then(|| Violation { set: members.to_vec(), t: Vec::new(), value, threshold })
        }
        DensityLemma::L3 | DensityLemma::L4 => {
            let j = if lemma == DensityLemma::L3 { 1 } else { 2 };
            let mut inside = VertexSet::new(h.n());
            members.iter().for_each(|&v| {
                inside.insert(v);
            });
            let t: Vec<u32> =
                members.iter().copied().filter(|&v| h.partial_degree_in(&inside, v, j) as f64 >= p.delta).collect();
            let value = t.len() as f64;
            let threshold = p.tau * s;
            (!t.is_empty() && value >= threshold).then(|| Violation { set: members.to_vec(), t, value, threshold })
        }
    }
}

fn grown_set(h: &Hypergraph, size: usize, rng: &mut GameRng) -> Vec<u32> {
    let n = h.n();
    let mut inside = VertexSet::new(n);
    let mut members = Vec::with_capacity(size);
    let mut frontier = Vec::new();
    while members.len() < size {
        let v = loop {
            if frontier.is_empty() {
                break rng.random_range(0..n as u32);
            }
            let i = rng.random_range(0..frontier.len());
            let v = frontier.swap_remove(i);
            if !inside.contains(v) {
                break v;
            }
        };
        if !inside.insert(v) {
            continue;
        }
        members.push(v);
        for &e in h.incident(v) {
            frontier.extend(h.edge(e as usize).iter().copied().filter(|&x| !inside.contains(x)));
        }
    }
    members.sort_unstable();
    members
}

/// Searches for sets violating `lemma` under `params`.
///
/// Exhaustive mode is a proof of absence; sampled mode is one-sided.
pub fn density_predicate_check(
    h: &Hypergraph,
    lemma: DensityLemma,
    params: DensityParams,
    mode: SearchMode,
) -> Result<DensityReport, AnalysisError> {
    h.require_three_uniform()?;
    let n = h.n();
    if !(params.sigma >= 0.0 && params.theta >= 0.0 && params.tau >= 0.0) {
        return domain("sigma, theta and tau must be nonnegative");
    }
    let max_size = ((params.sigma * n as f64).floor() as usize).min(n);
    let results: Vec<Option<Violation>> = match mode {
        SearchMode::Exhaustive => {
            if n > 15 {
                return domain(format!("exhaustive search needs n <= 15, got {n}"));
            }
            (1u32..1 << n)
                .filter(|m| m.count_ones() as usize <= max_size)
                .map(|m| {
                    let members: Vec<u32> = (0..n as u32).filter(|i| m >> i & 1 == 1).collect();
                    evaluate(h, lemma, &params, &members)
                })
                .collect()
        }
        SearchMode::Sampled { trials, seed } => {
            if max_size == 0 {
                Vec::new()
            } else {
                (0..trials)
                    .into_par_iter()
                    .map(|t| {
                        let mut rng = rng_from_seed(trial_seed(seed, t, lemma.index()));
                        let size = rng.random_range(1..=max_size);
                        let members = if t % 2 == 0 {
                            let mut m: Vec<u32> = sample(&mut rng, n, size).iter().map(|v| v as u32).collect();
                            m.sort_unstable();
                            m
                        } else {
                            grown_set(h, size, &mut rng)
                        };
                        evaluate(h, lemma, &params, &members)
                    })
                    .collect()
            }
        }
    };
    let sets_checked = results.len() as u64;
    let violation_count = results.iter().filter(|r| r.is_some()).count() as u64;
    let violations = results.into_iter().flatten().take(DensityReport::KEPT).collect();
    Ok(DensityReport { lemma, params, mode, sets_checked, violation_count, violations })
}

/// The numeric side conditions under which a lemma claims its statement.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hypothesis {
    pub lemma: DensityLemma,
    pub d: f64,
    /// Named conditions and whether each holds.
    pub conditions: Vec<(String, bool)>,
    pub lhs: f64,
    pub rhs: f64,
}

impl Hypothesis {
    pub fn holds(&self) -> bool {
        self.conditions.iter().all(|c| c.1)
    }
}

pub fn hypothesis(lemma: DensityLemma, d: f64, p: &DensityParams) -> Hypothesis {
    let e = std::f64::consts::E;
    let (s, th) = (p.sigma, p.theta);
    let mut conditions = Vec::new();
    let base = |lemma| match lemma {
        DensityLemma::L1 | DensityLemma::L3 => ((s * e * d / (2.0 * th)).powf(th), s / (2.0 * e), th > 1.0, "theta > 1"),
        _ => ((s * s * e * d / (6.0 * th)).powf(th), s / (2.0 * e), th > 0.5, "theta > 1/2"),
    };
    let (lhs, rhs) = match lemma {
        DensityLemma::L1 | DensityLemma::L2 => {
            let (lhs, rhs, ok, name) = base(lemma);
            conditions.push((name.to_string(), ok));
            conditions.push(("density inequality".to_string(), lhs <= rhs));
            (lhs, rhs)
        }
        DensityLemma::L3 | DensityLemma::L4 => {
            let (blhs, brhs, ok, name) = base(lemma);
            conditions.push((name.to_string(), ok));
            conditions.push(("base density inequality".to_string(), blhs <= brhs));
            let (m, lhs) = if lemma == DensityLemma::L3 {
                let m = (p.delta - 2.0 * th) * p.tau;
                (m, (s * e * d / m).powf(m))
            } else {
                let m = (p.delta - 3.0 * th) * p.tau;
                (m, (s * s * e * d / (2.0 * m)).powf(m))
            };
            let rhs = s / (4.0 * e);
            conditions.push(("(Delta - c theta) tau > 1".to_string(), m > 1.0));
            conditions.push(("degree inequality".to_string(), lhs <= rhs));
            (lhs, rhs)
        }
    };
    Hypothesis { lemma, d, conditions, lhs, rhs }
}

/// Largest `σ` satisfying the lemma's inequalities for the given `d`, `θ`
/// (and `Δ`, `τ` for L3, L4). `None` when no positive `σ` works.
pub fn sigma_max(lemma: DensityLemma, d: f64, p: &DensityParams) -> Option<f64> {
    let e = std::f64::consts::E;
    let th = p.theta;
    // σ^a <= b  ⇒  σ <= b^{1/a}.
    let solve = |a: f64, b: f64| if a > 0.0 { Some(b.powf(1.0 / a)) } else { None };
    let l1 = || solve(th - 1.0, (2.0 * th / (e * d)).powf(th) / (2.0 * e));
    let l2 = || solve(2.0 * th - 1.0, (6.0 * th / (e * d)).powf(th) / (2.0 * e));
    match lemma {
        DensityLemma::L1 => l1(),
        DensityLemma::L2 => l2(),
        DensityLemma::L3 => {
            let m = (p.delta - 2.0 * th) * p.tau;
            let own = solve(m - 1.0, (m / (e * d)).powf(m) / (4.0 * e))?;
            Some(own.min(l1()?))
        }
        DensityLemma::L4 => {
            let m = (p.delta - 3.0 * th) * p.tau;
            let own = solve(2.0 * m - 1.0, (2.0 * m / (e * d)).powf(m) / (4.0 * e))?;
            Some(own.min(l2()?))
        }
    }
}
