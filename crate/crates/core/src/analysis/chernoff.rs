use rand_distr::{Binomial, Distribution};
use serde::Serialize;

use super::montecarlo::sharded_mean;
use super::{domain, AnalysisError};
use crate::scalar::Real;

/// Which tail bound of `X ~ Bin(n, p)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tail<T> {
    /// `P(X <= (1-ε)np) <= exp(-ε²np/2)`.
    Lower,
    /// `P(X >= (1+ε)np) <= exp(-ε²np/3)` for `ε <= 1`.
    Upper,
    /// `P(X >= μnp) <= (e/μ)^{μnp}`; `ε` is ignored.
    Multiplicative(T),
}

pub fn chernoff<T: Real>(np: T, eps: T, tail: &Tail<T>) -> Result<T, AnalysisError> {
    if !(np >= T::zero()) {
        return domain(format!("need np >= 0, got {np:?}"));
    }
    match tail {
        Tail::Lower | Tail::Upper => {
            if !(eps >= T::zero()) {
                return domain(format!("need eps >= 0, got {eps:?}"));
            }
            let denom = match tail {
                Tail::Lower => T::from_u64(2),
                _ => {
                    if eps > T::one() {
                        return domain(format!("upper tail needs eps <= 1, got {eps:?}"));
                    }
                    T::from_u64(3)
                }
            };
            Ok((-(eps.clone() * eps * np) / denom).exp())
        }
        Tail::Multiplicative(mu) => {
            if !(*mu > T::zero()) {
                return domain(format!("need mu > 0, got {mu:?}"));
            }
            let base = T::e() / mu.clone();
            Ok((mu.clone() * np * base.ln()).exp())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChernoffCheck {
    pub n: u64,
    pub p: f64,
    pub eps: f64,
    pub tail: Tail<f64>,
    pub threshold: f64,
    pub empirical: f64,
    pub stderr: f64,
    pub bound: f64,
    /// `empirical <= bound + 3 stderr`.
    pub holds: bool,
}

/// Monte Carlo frequency of the tail event against the bound.
pub fn chernoff_check(n: u64, p: f64, eps: f64, tail: Tail<f64>, samples: u64, seed: u64) -> Result<ChernoffCheck, AnalysisError> {
    if !(0.0..=1.0).contains(&p) {
        return domain(format!("need 0 <= p <= 1, got {p}"));
    }
    if samples == 0 {
        return domain("need at least one sample");
    }
    let np = n as f64 * p;
    let bound = chernoff(np, eps, &tail)?;
    let bin = Binomial::new(n, p).map_err(|e| AnalysisError::Domain(e.to_string()))?;
    let (threshold, upper) = match tail {
        Tail::Lower => ((1.0 - eps) * np, false),
        Tail::Upper => ((1.0 + eps) * np, true),
        Tail::Multiplicative(mu) => (mu * np, true),
    };
    let est = sharded_mean(samples, seed, |rng| {
        let x = bin.sample(rng) as f64;
        let hit = if upper { x >= threshold } else { x <= threshold };
        f64::from(u8::from(hit))
    });
    Ok(ChernoffCheck {
        n,
        p,
        eps,
        tail,
        threshold,
        empirical: est.mean,
        stderr: est.stderr,
        bound,
        holds: est.mean <= bound + 3.0 * est.stderr,
    })
}
