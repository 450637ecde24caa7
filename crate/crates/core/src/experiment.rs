//! Reproducible batch runs: single trials, q sweeps, trend statistics.
//!
//! Trial `t` at `q` colors plays with seed `trial_seed(master, t, q)`, so any
//! record replays from its echoed config and seed alone.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{play_game, GameError, Player};
use crate::rng::trial_seed;
use crate::strategy::{alice_strategy, bob_strategy, StrategyConfig, StrategyError};
use crate::Hypergraph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExperimentError {
    #[error(transparent)]
    Strategy(#[from] StrategyError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("empty q range {lo}..{hi}")]
    EmptyRange { lo: usize, hi: usize },
    #[error("at least one trial is required")]
    NoTrials,
}

/// What a trial needs besides the hypergraph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub n: usize,
    pub k: usize,
    pub d: f64,
    pub q: usize,
    pub alice: String,
    pub bob: String,
    pub delta: f64,
    pub master_seed: u64,
    /// Record one `round mover vertex color a_min` line per move.
    #[serde(default)]
    pub trace: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseTwoSummary {
    pub switched: bool,
    pub decomposition_verified: bool,
    pub max_colored_phi_neighbours: u32,
    pub fallback_events: u64,
    pub coloring_events: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub config: TrialConfig,
    pub trial: u64,
    pub seed: u64,
    pub winner: Player,
    pub rounds: usize,
    pub dead_vertex: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub forfeit: Option<Player>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub phase_two: Option<PhaseTwoSummary>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub trace: Vec<String>,
}

pub fn run_trial(graph: &Hypergraph, config: &TrialConfig, trial: u64) -> Result<TrialRecord, ExperimentError> {
    let seed = trial_seed(config.master_seed, trial, config.q as u64);
    let mut alice = alice_strategy(&config.alice, StrategyConfig { d: config.d, delta: config.delta })?;
    let mut bob = bob_strategy(&config.bob)?;
    let outcome = play_game(graph, config.q, alice.as_mut(), bob.as_mut(), seed, config.trace)?;
    let phase_two = alice.phase_two().map(|r| PhaseTwoSummary {
        switched: r.switched_at_move.is_some(),
        decomposition_verified: r.decomposition_verified,
        max_colored_phi_neighbours: r.max_colored_phi_neighbours,
        fallback_events: r.fallback_events,
        coloring_events: r.coloring_events,
    });
    Ok(TrialRecord {
        config: config.clone(),
        trial,
        seed,
        winner: outcome.winner,
        rounds: outcome.moves,
        dead_vertex: outcome.dead_vertex(),
        forfeit: outcome.forfeit.as_ref().map(|f| f.player),
        phase_two,
        trace: outcome.trace.iter().map(ToString::to_string).collect(),
    })
}

/// Runs `trials` games in parallel; the result is ordered by trial index.
pub fn run_trials(graph: &Hypergraph, config: &TrialConfig, trials: u64) -> Result<Vec<TrialRecord>, ExperimentError> {
    if trials == 0 {
        return Err(ExperimentError::NoTrials);
    }
    // Reject bad names before spawning work.
    alice_strategy(&config.alice, StrategyConfig::default())?;
    bob_strategy(&config.bob)?;
    (0..trials).into_par_iter().map(|t| run_trial(graph, config, t)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub q: usize,
    pub trials: u64,
    pub a_wins: u64,
    pub win_rate: f64,
}

/// One row per `q`, ascending. `base.q` is ignored.
pub fn sweep(
    graph: &Hypergraph,
    base: &TrialConfig,
    qs: RangeInclusive<usize>,
    trials: u64,
) -> Result<Vec<SweepRow>, ExperimentError> {
    if qs.is_empty() {
        return Err(ExperimentError::EmptyRange { lo: *qs.start(), hi: *qs.end() });
    }
    qs.map(|q| {
        let config = TrialConfig { q, ..base.clone() };
        let records = run_trials(graph, &config, trials)?;
        let a_wins = records.iter().filter(|r| r.winner == Player::A).count() as u64;
        Ok(SweepRow { q, trials, a_wins, win_rate: a_wins as f64 / trials as f64 })
    })
    .collect()
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("q,trials,a_wins,win_rate\n");
    for r in rows {
        writeln!(out, "{},{},{},{}", r.q, r.trials, r.a_wins, r.win_rate).unwrap();
    }
    out
}

/// Smallest `q` whose win rate reaches one half.
pub fn crossing_point(rows: &[SweepRow]) -> Option<usize> {
    rows.iter().find(|r| r.win_rate >= 0.5).map(|r| r.q)
}

fn ranks(xs: &[f64]) -> Vec<f64> {
    let mut idx: Vec<usize> = (0..xs.len()).collect();
    idx.sort_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let mut r = vec![0.0; xs.len()];
    let mut i = 0;
    while i < idx.len() {
        let mut j = i;
        while j + 1 < idx.len() && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            r[k] = avg;
        }
        i = j + 1;
    }
    r
}

/// Spearman rank correlation with average ranks for ties.
/// `None` if either side is constant or the lengths differ.
pub fn spearman(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return None;
    }
    let (rx, ry) = (ranks(xs), ranks(ys));
    let m = (xs.len() as f64 + 1.0) / 2.0;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in rx.iter().zip(&ry) {
        sxy += (a - m) * (b - m);
        sxx += (a - m) * (a - m);
        syy += (b - m) * (b - m);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx * syy).sqrt())
}

/// Least-squares non-decreasing fit (pool adjacent violators).
pub fn isotonic(ys: &[f64]) -> Vec<f64> {
    let mut blocks: Vec<(f64, usize)> = Vec::new();
    for &y in ys {
        blocks.push((y, 1));
        while blocks.len() > 1 {
            let (b, nb) = blocks[blocks.len() - 1];
            let (a, na) = blocks[blocks.len() - 2];
            if a <= b {
                break;
            }
            blocks.pop();
            let total = na + nb;
            *blocks.last_mut().unwrap() = ((a * na as f64 + b * nb as f64) / total as f64, total);
        }
    }
    blocks.into_iter().flat_map(|(v, c)| std::iter::repeat_n(v, c)).collect()
}
