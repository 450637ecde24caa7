//! Player strategies and the name registry used by the command line.

mod alice;
mod bob;
pub mod decomposition;
mod forest;
mod two_phase;

pub use alice::Greedy;
pub use bob::{Block, Mirror, UniformRandom};
pub use decomposition::{
    build_decomposition, verify_properties, BuildFailure, Decomposition, DecompositionParams, EdgeLabel,
    PropertyReport,
};
pub use forest::ForestGame;
pub use two_phase::{PhaseTwoReport, TwoPhase};

use rand::Rng;
use thiserror::Error;

use crate::game::{Color, GameState, Move};
use crate::rng::GameRng;

/// A move oracle. `observe` is called after every applied move, by either
/// player, with the state that results from it.
pub trait Strategy: Send {
    fn name(&self) -> &'static str;

    fn choose(&mut self, state: &GameState<'_>, rng: &mut GameRng) -> (u32, Color);

    fn observe(&mut self, _state: &GameState<'_>, _mv: Move) {}

    fn phase_two(&self) -> Option<&PhaseTwoReport> {
        None
    }
}

pub const ALICE_STRATEGIES: [&str; 2] = ["greedy", "two-phase"];
pub const BOB_STRATEGIES: [&str; 3] = ["mirror", "random", "block"];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrategyError {
    #[error("unknown strategy `{0}` (expected one of alice:greedy, alice:two-phase, bob:mirror, bob:random, bob:block)")]
    Unknown(String),
    #[error("strategy `{name}` plays for {expected}")]
    WrongSide { name: String, expected: &'static str },
}

/// Knobs needed by strategies that depend on the instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StrategyConfig {
    pub d: f64,
    pub delta: f64,
}

impl Default for StrategyConfig {
    fn default() -> Self {
        StrategyConfig { d: 2.0, delta: 0.1 }
    }
}

fn strip<'a>(name: &'a str, side: &str) -> Result<&'a str, StrategyError> {
    match name.split_once(':') {
        Some((prefix, rest)) if prefix == side => Ok(rest),
        Some((prefix, _)) if prefix == "alice" || prefix == "bob" => Err(StrategyError::WrongSide {
            name: name.to_string(),
            expected: if side == "alice" { "bob" } else { "alice" },
        }),
        Some(_) => Err(StrategyError::Unknown(name.to_string())),
        None => Ok(name),
    }
}

/// Accepts `greedy` or `alice:greedy` style names.
pub fn alice_strategy(name: &str, config: StrategyConfig) -> Result<Box<dyn Strategy>, StrategyError> {
    match strip(name, "alice")? {
        "greedy" => Ok(Box::new(Greedy)),
        "two-phase" => Ok(Box::new(TwoPhase::new(config.d, config.delta))),
        _ => Err(StrategyError::Unknown(name.to_string())),
    }
}

pub fn bob_strategy(name: &str) -> Result<Box<dyn Strategy>, StrategyError> {
    match strip(name, "bob")? {
        "mirror" => Ok(Box::new(Mirror)),
        "random" => Ok(Box::new(UniformRandom)),
        "block" => Ok(Box::new(Block)),
        _ => Err(StrategyError::Unknown(name.to_string())),
    }
}

/// Uniform over all legal `(vertex, color)` pairs.
pub(crate) fn uniform_legal_move(state: &GameState<'_>, rng: &mut GameRng) -> (u32, Color) {
    let total = state.legal_move_count();
    assert!(total > 0, "no legal move in a running game");
    let mut r = rng.random_range(0..total);
    for c in 1..=state.q() as Color {
        let set = state.candidates(c);
        if r < set.len() {
            return (set.select(r).expect("rank within set"), c);
        }
        r -= set.len();
    }
    unreachable!("rank exceeds legal move count")
}
