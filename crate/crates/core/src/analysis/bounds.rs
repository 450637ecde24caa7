use serde::Serialize;

use super::{domain, AnalysisError};
use crate::scalar::Real;

/// Derived quantities of the lower- and upper-bound arguments.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundParams<T> {
    pub d: T,
    pub k: u32,
    pub eps: T,
    pub delta: T,
    /// `(d / (k! ln d))^{1/(k-1)}`.
    pub big_d: T,
    /// `(1+ε)(k-1)^{1/(k-1)}`.
    pub alpha: T,
    /// `q = αD`, the color count of the lower-bound argument.
    pub lower_colors: T,
    /// `(1-2ε) / (2 (k-1)^{1/(k-1)})`.
    pub beta: T,
    /// `ε / (k-1)^{1/(k-1)}`.
    pub gamma: T,
    /// Fraction of rounds, `α(2β+γ)/2`.
    pub theta: T,
    /// `(d / (k (k-2)! ln d))^{1/(k-1)}`, the chromatic number estimate.
    pub chi_est: T,
    /// `(1+ε) chi_est`.
    pub game_lower: T,
    /// `d^{2/3+δ}`.
    pub ub: T,
}

fn factorial<T: Real>(k: u32) -> T {
    (1..=k as u64).fold(T::one(), |acc, i| acc * T::from_u64(i))
}

pub fn eval_bounds<T: Real>(d: T, k: u32, eps: T, delta: T) -> Result<BoundParams<T>, AnalysisError> {
    let half = T::from_f64(0.5);
    if !(d > T::one()) {
        return domain(format!("need d > 1, got {d:?}"));
    }
    if k < 3 {
        return domain(format!("need k >= 3, got {k}"));
    }
    if !(eps > T::zero() && eps < half) {
        return domain(format!("need 0 < eps < 1/2, got {eps:?}"));
    }
    if !(delta > T::zero()) {
        return domain(format!("need delta > 0, got {delta:?}"));
    }
    let ln_d = d.ln();
    let root = T::one() / T::from_u64(k as u64 - 1);
    let km1_root = T::from_u64(k as u64 - 1).powf(&root);
    let big_d = (d.clone() / (factorial::<T>(k) * ln_d.clone())).powf(&root);
    let alpha = (T::one() + eps.clone()) * km1_root.clone();
    let two = T::from_u64(2);
    let beta = (T::one() - two.clone() * eps.clone()) / (two.clone() * km1_root.clone());
    let gamma = eps.clone() / km1_root;
    let theta = alpha.clone() * (two.clone() * beta.clone() + gamma.clone()) / two;
    let chi_est = (d.clone() / (T::from_u64(k as u64) * factorial::<T>(k - 2) * ln_d)).powf(&root);
    let exponent = T::from_u64(2) / T::from_u64(3) + delta.clone();
    Ok(BoundParams {
        lower_colors: alpha.clone() * big_d.clone(),
        game_lower: (T::one() + eps.clone()) * chi_est.clone(),
        ub: d.powf(&exponent),
        d,
        k,
        eps,
        delta,
        big_d,
        alpha,
        beta,
        gamma,
        theta,
        chi_est,
    })
}

/// `(β, γ)` of the lower-bound argument for a given `ε` and `k`.
pub fn lower_bound_parameters<T: Real>(eps: T, k: u32) -> (T, T) {
    let root = T::one() / T::from_u64(k as u64 - 1);
    let km1_root = T::from_u64(k as u64 - 1).powf(&root);
    let two = T::from_u64(2);
    let beta = (T::one() - two.clone() * eps.clone()) / (two * km1_root.clone());
    (beta, eps / km1_root)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FormulaCheck<T> {
    pub lhs: T,
    pub rhs: T,
    pub holds: bool,
}

impl<T: Real> FormulaCheck<T> {
    pub fn gap(&self) -> T {
        self.lhs.clone() - self.rhs.clone()
    }
}

/// `2(2β+γ)^k - (2β)^k > 2(β+γ)/(k-1)`.
pub fn formula_holds<T: Real>(beta: T, gamma: T, k: u32) -> FormulaCheck<T> {
    let two = T::from_u64(2);
    let lhs = two.clone() * (two.clone() * beta.clone() + gamma.clone()).powi(k) - (two.clone() * beta.clone()).powi(k);
    let rhs = two * (beta + gamma) / T::from_u64(k as u64 - 1);
    let holds = lhs > rhs;
    FormulaCheck { lhs, rhs, holds }
}

/// For `k = 3` at the lower-bound `(β, γ)`, `LHS - RHS` simplifies to
/// `(6ε³ - 6ε²) / (2√2)`, negative for every `ε ∈ (0, 1)`.
pub fn formula_gap_closed_form<T: Real>(eps: T) -> T {
    let six = T::from_u64(6);
    let e2 = eps.clone() * eps.clone();
    let e3 = e2.clone() * eps;
    (six.clone() * e3 - six * e2) / (T::from_u64(2) * T::from_u64(2).sqrt())
}
