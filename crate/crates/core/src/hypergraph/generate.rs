//! Sampling of H(n, p; k) by geometric skipping over colex-ranked k-subsets.

use rand_distr::{Distribution, Geometric};

use super::{Hypergraph, HypergraphError};
use crate::rng::rng_from_seed;

/// `C(n, k)`, or `None` if it overflows `u64`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// The k-subset of `0..n` with the given colex rank, ascending.
///
/// Colex rank of `{c_1 < ... < c_k}` is `sum_i C(c_i, i)`.
pub fn colex_unrank(mut rank: u64, k: usize, n: usize) -> Vec<u32> {
    let mut out = vec![0u32; k];
    let mut hi = n as u64;
    for i in (1..=k as u64).rev() {
        // Largest c < hi with C(c, i) <= rank.
        let (mut lo, mut top) = (i - 1, hi - 1);
        while lo < top {
            let mid = lo + (top - lo).div_ceil(2);
            if binomial(mid, i).is_some_and(|b| b <= rank) {
                lo = mid;
            } else {
                top = mid - 1;
            }
        }
        out[i as usize - 1] = lo as u32;
        rank -= binomial(lo, i).expect("bounded by a representable rank");
        hi = lo;
    }
    out
}

impl Hypergraph {
    /// Random k-uniform hypergraph with edge probability `p = d / n^(k-1)`.
    ///
    /// Identical `(n, k, d, seed)` always gives the identical hypergraph.
    pub fn generate_random(n: usize, k: usize, d: f64, seed: u64) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::Uniformity(k));
        }
        if n < k {
            return Err(HypergraphError::TooFewVertices { n, k });
        }
        let scale = (n as f64).powi(k as i32 - 1);
        if !(d >= 0.0 && d <= scale) {
            return Err(HypergraphError::Density { d, max: scale });
        }
        let total = binomial(n as u64, k as u64).ok_or(HypergraphError::TooManySubsets { n, k })?;
        let p = d / scale;
        let mut flat = Vec::new();
        if p >= 1.0 {
            for r in 0..total {
                flat.extend(colex_unrank(r, k, n));
            }
        } else if p > 0.0 {
            let mut rng = rng_from_seed(seed);
            let skip = Geometric::new(p).expect("0 < p < 1");
            let mut next: u64 = 0;
            loop {
                let gap = skip.sample(&mut rng);
                next = match next.checked_add(gap) {
                    Some(r) if r < total => r,
                    _ => break,
                };
                flat.extend(colex_unrank(next, k, n));
                next += 1;
            }
        }
        Ok(Self::from_flat_unchecked(n, k, flat))
    }
}
