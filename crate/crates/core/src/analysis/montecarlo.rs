use rayon::prelude::*;

use crate::rng::{rng_from_seed, trial_seed, GameRng};

/// Fixed shard count, so estimates do not depend on the thread pool size.
const SHARDS: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct MeanEstimate {
    pub mean: f64,
    pub stderr: f64,
}

/// Mean of `samples` draws of `f`, split into shards seeded by
/// `trial_seed(seed, shard, 0)` and summed in shard order.
pub(crate) fn sharded_mean<F>(samples: u64, seed: u64, f: F) -> MeanEstimate
where
    F: Fn(&mut GameRng) -> f64 + Sync,
{
    let sums: Vec<(f64, f64)> = (0..SHARDS)
        .into_par_iter()
        .map(|shard| {
            let count = samples / SHARDS + u64::from(shard < samples % SHARDS);
            let mut rng = rng_from_seed(trial_seed(seed, shard, 0));
            let mut s = 0.0;
            let mut s2 = 0.0;
            for _ in 0..count {
                let x = f(&mut rng);
                s += x;
                s2 += x * x;
            }
            (s, s2)
        })
        .collect();
    let (s, s2) = sums.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let m = samples as f64;
    let mean = s / m;
    let var = if samples > 1 { ((s2 - m * mean * mean) / (m - 1.0)).max(0.0) } else { 0.0 };
    MeanEstimate { mean, stderr: (var / m).sqrt() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn uniform_mean() {
        let est = sharded_mean(100_000, 3, |r| r.random::<f64>());
        assert!((est.mean - 0.5).abs() < 4.0 * est.stderr);
        assert!((est.stderr - (1.0 / 12.0f64 / 1e5).sqrt()).abs() < 1e-4);
        assert_eq!(est, sharded_mean(100_000, 3, |r| r.random::<f64>()));
    }

    #[test]
    fn handles_fewer_samples_than_shards() {
        let est = sharded_mean(5, 1, |_| 2.0);
        assert_eq!(est.mean, 2.0);
        assert_eq!(est.stderr, 0.0);
    }
}
