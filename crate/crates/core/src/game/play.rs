use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Color, GameError, GameState, Player, Status};
use crate::hypergraph::Hypergraph;
use crate::rng::{mix64, rng_from_seed};
use crate::strategy::Strategy;

/// One line of a game trace: `round mover vertex color a_min`, where
/// `a_min` is the minimum availability after the move (`-` once nothing is
/// left uncolored).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceLine {
    pub round: usize,
    pub mover: Player,
    pub vertex: u32,
    pub color: Color,
    pub a_min: Option<usize>,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} ", self.round, self.mover, self.vertex, self.color)?;
        match self.a_min {
            Some(a) => write!(f, "{a}"),
            None => f.write_str("-"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Forfeit {
    pub player: Player,
    pub vertex: u32,
    pub color: Color,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameOutcome {
    pub winner: Player,
    pub status: Status,
    pub moves: usize,
    /// Set when a strategy proposed an illegal move and lost by forfeit.
    pub forfeit: Option<Forfeit>,
    pub coloring: Vec<Color>,
    pub trace: Vec<TraceLine>,
}

impl GameOutcome {
    pub fn dead_vertex(&self) -> Option<u32> {
        match self.status {
            Status::BWon { dead } => Some(dead),
            _ => None,
        }
    }
}

/// Plays one game to completion. Each player draws from its own stream
/// derived from `seed`. A strategy that proposes an illegal move forfeits.
pub fn play_game(
    graph: &Hypergraph,
    q: usize,
    alice: &mut dyn Strategy,
    bob: &mut dyn Strategy,
    seed: u64,
    record_trace: bool,
) -> Result<GameOutcome, GameError> {
    let mut state = GameState::new(graph, q)?;
    let mut rng_a = rng_from_seed(mix64(seed ^ 0x41));
    let mut rng_b = rng_from_seed(mix64(seed ^ 0x42));
    let mut trace = Vec::new();
    let mut forfeit = None;

    while !state.is_over() {
        let player = state.turn();
        let ((vertex, color), name) = match player {
            Player::A => (alice.choose(&state, &mut rng_a), alice.name()),
            Player::B => (bob.choose(&state, &mut rng_b), bob.name()),
        };
        if let Err(err) = state.apply_move(vertex, color, player) {
            log::warn!("{name} forfeits: {err}");
            forfeit = Some(Forfeit { player, vertex, color, reason: err.to_string() });
            break;
        }
        let mv = state.last_move().expect("move just applied");
        alice.observe(&state, mv);
        bob.observe(&state, mv);
        if record_trace {
            trace.push(TraceLine {
                round: (state.history().len() - 1) / 2 + 1,
                mover: player,
                vertex,
                color,
                a_min: state.min_availability(),
            });
        }
    }

    let winner = match (&forfeit, state.status()) {
        (Some(f), _) => f.player.opponent(),
        (None, Status::AWon) => Player::A,
        (None, _) => Player::B,
    };
    Ok(GameOutcome {
        winner,
        status: state.status(),
        moves: state.history().len(),
        forfeit,
        coloring: state.colors().to_vec(),
        trace,
    })
}
