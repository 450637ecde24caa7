//! Seeding contract.
//!
//! All randomness flows from [`GameRng`], ChaCha with 8 rounds as implemented
//! by `rand_chacha` 0.9, seeded through `SeedableRng::seed_from_u64`. Per-trial
//! seeds are derived from the master seed with [`trial_seed`], which chains the
//! SplitMix64 finalizer. Both algorithms are part of the record format: a
//! `TrialRecord` replays bit-for-bit only under the same generator.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type GameRng = ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// SplitMix64 output function applied to `x + GOLDEN_GAMMA`.
pub fn mix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// `mix64(mix64(mix64(master) ^ trial) ^ q)`.
pub fn trial_seed(master: u64, trial: u64, q: u64) -> u64 {
    mix64(mix64(mix64(master) ^ trial) ^ q)
}

pub fn rng_from_seed(seed: u64) -> GameRng {
    GameRng::seed_from_u64(seed)
}
