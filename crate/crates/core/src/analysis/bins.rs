use rand_distr::{Binomial, Distribution};
use serde::Serialize;

use super::montecarlo::sharded_mean;
use super::{domain, AnalysisError};
use crate::scalar::Real;

/// Largest `P(B = 0)` for which the untruncated expectation is accepted.
pub const ZERO_MASS_LIMIT: f64 = 1e-12;

/// `7 ρ^{-q} ∏_{i=1..q} 1/(v+i)`.
pub fn bins_bound<T: Real>(v: u64, rho: T, q: u32) -> T {
    let mut acc = T::from_u64(7);
    for i in 1..=q as u64 {
        acc = acc / (rho.clone() * T::from_u64(v + i));
    }
    acc
}

fn product(b: u64, q: u32) -> f64 {
    (1..=q as u64).fold(1.0, |acc, i| acc / (b + i - 1) as f64)
}

/// `E[∏_{i=1..q} 1/(B+i-1) ; B >= 1]` summed exactly over the pmf.
/// For `q = 0` the value is 1.
pub fn bins_exact(v: u64, rho: f64, q: u32) -> f64 {
    if q == 0 {
        return 1.0;
    }
    if rho >= 1.0 {
        return if v == 0 { 0.0 } else { product(v, q) };
    }
    let ratio = (rho / (1.0 - rho)).ln();
    let mut log_pmf = v as f64 * (-rho).ln_1p();
    let mut total = 0.0;
    for b in 1..=v {
        log_pmf += ((v - b + 1) as f64 / b as f64).ln() + ratio;
        total += (log_pmf - (1..=q as u64).map(|i| ((b + i - 1) as f64).ln()).sum::<f64>()).exp();
    }
    total
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BinsCheck {
    pub v: u64,
    pub rho: f64,
    pub q: u32,
    pub trials: u64,
    pub estimate: f64,
    pub stderr: f64,
    pub bound: f64,
    /// `estimate <= bound + 3 stderr`.
    pub holds: bool,
    pub zero_mass: f64,
    /// Set when the `B = 0` samples were dropped from the expectation.
    pub truncated: bool,
}

/// Monte Carlo estimate of `E[∏_{i=1..q} 1/(B+i-1)]` for `B ~ Bin(v, ρ)`.
///
/// The left side is infinite when `P(B = 0) > 0` and `q >= 1`, so the check
/// is refused unless `P(B = 0) < 1e-12`; see [`bins_check_truncated`].
pub fn bins_check(v: u64, rho: f64, q: u32, trials: u64, seed: u64) -> Result<BinsCheck, AnalysisError> {
    let zero_mass = validate(v, rho, trials)?;
    if q > 0 && zero_mass >= ZERO_MASS_LIMIT {
        return domain(format!(
            "P(B = 0) = {zero_mass:.3e} >= {ZERO_MASS_LIMIT:e}: the expectation is infinite"
        ));
    }
    Ok(run(v, rho, q, trials, seed, zero_mass, false))
}

/// As [`bins_check`] but estimates `E[∏ ; B >= 1]`, counting `B = 0` as 0.
pub fn bins_check_truncated(v: u64, rho: f64, q: u32, trials: u64, seed: u64) -> Result<BinsCheck, AnalysisError> {
    let zero_mass = validate(v, rho, trials)?;
    Ok(run(v, rho, q, trials, seed, zero_mass, true))
}

fn validate(v: u64, rho: f64, trials: u64) -> Result<f64, AnalysisError> {
    if !(rho > 0.0 && rho <= 1.0) {
        return domain(format!("need 0 < rho <= 1, got {rho}"));
    }
    if trials == 0 {
        return domain("need at least one trial");
    }
    Ok((1.0 - rho).powf(v as f64))
}

fn run(v: u64, rho: f64, q: u32, trials: u64, seed: u64, zero_mass: f64, truncated: bool) -> BinsCheck {
    let bin = Binomial::new(v, rho).expect("validated parameters");
    let est = sharded_mean(trials, seed, |rng| {
        let b = bin.sample(rng);
        if q > 0 && b == 0 {
            if truncated {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            product(b, q)
        }
    });
    let bound = bins_bound(v, rho, q);
    BinsCheck {
        v,
        rho,
        q,
        trials,
        estimate: est.mean,
        stderr: est.stderr,
        bound,
        holds: est.mean <= bound + 3.0 * est.stderr,
        zero_mass,
        truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_values() {
        assert!((bins_bound(100, 0.5, 1) - 14.0 / 101.0).abs() < 1e-15);
        assert!((bins_bound(100, 0.5, 2) - 28.0 / (101.0 * 102.0)).abs() < 1e-15);
        assert!((bins_bound(100, 0.5, 2) - 2.718e-3).abs() < 1e-6);
        assert_eq!(bins_bound(100, 0.5, 0), 7.0);
    }

    #[test]
    fn empty_product() {
        let c = bins_check(10, 0.1, 0, 1000, 1).unwrap();
        assert_eq!(c.estimate, 1.0);
        assert_eq!(c.bound, 7.0);
        assert!(c.holds);
    }

    #[test]
    fn monte_carlo_matches_exact_sum() {
        let c = bins_check(100, 0.5, 1, 200_000, 5).unwrap();
        let exact = bins_exact(100, 0.5, 1);
        assert!((c.estimate - exact).abs() < 4.0 * c.stderr);
        assert!((exact - 0.0204).abs() < 1e-3);
        assert!(c.holds && !c.truncated);
    }

    #[test]
    fn exact_sum_small_case() {
        // Bin(2, 1/2): P(1) = 1/2, P(2) = 1/4.
        assert!((bins_exact(2, 0.5, 1) - (0.5 + 0.125)).abs() < 1e-15);
        assert!((bins_exact(2, 0.5, 2) - (0.25 + 0.25 / 6.0)).abs() < 1e-15);
        assert_eq!(bins_exact(3, 1.0, 1), 1.0 / 3.0);
    }

    #[test]
    fn rejects_heavy_zero_mass() {
        assert!(bins_check(50, 0.3, 1, 1000, 1).is_err());
        let c = bins_check_truncated(50, 0.3, 1, 100_000, 1).unwrap();
        assert!(c.truncated && c.holds);
        assert!((c.zero_mass - 0.7f64.powi(50)).abs() < 1e-20);
        assert!(bins_check(10, 0.0, 1, 10, 1).is_err());
    }
}
