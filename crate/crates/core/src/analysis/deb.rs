use serde::Serialize;

use super::{domain, AnalysisError};
use crate::scalar::Real;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DebCheck<T> {
    /// `f(C) = Σ (1-p)^{c_i²/2}`.
    pub value: T,
    pub bound: T,
    pub x0: T,
    /// True when `q x0 <= n`, i.e. the balanced branch applies.
    pub balanced_branch: bool,
    pub holds: bool,
}

/// `x0 = (2 / -ln(1-p))^{1/2}`.
pub fn x0<T: Real>(p: &T) -> T {
    (T::from_u64(2) / -(T::one() - p.clone()).ln()).sqrt()
}

/// Evaluates `f(C)` for the class sizes `sizes` and the claimed lower bound,
/// `q(1-p)^{n²/2q²}` if `q x0 <= n` and `q(1-p)^{x0²/2}` otherwise.
/// `holds` allows a relative slack of `1e-12`.
pub fn f_lower_bound_check<T: Real>(sizes: &[u64], p: T) -> Result<DebCheck<T>, AnalysisError> {
    if !(p > T::zero() && p < T::one()) {
        return domain(format!("need 0 < p < 1, got {p:?}"));
    }
    if sizes.is_empty() {
        return domain("need at least one class");
    }
    let log_keep = (T::one() - p.clone()).ln();
    let half = T::from_f64(0.5);
    let phi = |x: T| (x.clone() * x * half.clone() * log_keep.clone()).exp();
    let value = sizes.iter().fold(T::zero(), |acc, &c| acc + phi(T::from_u64(c)));
    let n = T::from_u64(sizes.iter().sum());
    let q = T::from_u64(sizes.len() as u64);
    let x0 = x0(&p);
    let balanced_branch = q.clone() * x0.clone() <= n;
    let bound = if balanced_branch { q.clone() * phi(n / q) } else { q * phi(x0.clone()) };
    let slack = T::one() - T::from_f64(1e-12);
    let holds = value >= bound.clone() * slack;
    Ok(DebCheck { value, bound, x0, balanced_branch, holds })
}
