use serde::{Deserialize, Serialize};

use super::decomposition::{build_decomposition, DecompositionParams, EdgeLabel};
use super::forest::ForestGame;
use super::{Greedy, Strategy};
use crate::game::{Color, GameState, Move, Player};
use crate::hypergraph::ShadowGraph;
use crate::rng::GameRng;

/// What happened after the switch to the second phase.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PhaseTwoReport {
    /// Number of moves made before the switch.
    pub switched_at_move: Option<usize>,
    pub uncolored_at_switch: usize,
    /// The decomposition was built and passed its own verification.
    pub decomposition_verified: bool,
    pub failure: Option<String>,
    pub level_sizes: Vec<usize>,
    pub light_edges: usize,
    pub heavy_edges: usize,
    pub cycle: bool,
    /// Colorings (by either player) of vertices of `Φ` after the switch.
    pub coloring_events: u64,
    pub max_colored_phi_neighbours: u32,
    /// Events above 3 colored `Φ`-neighbours (4 when `U_ℓ` holds a cycle).
    pub bound_violations: u64,
    /// Moves where no color avoided the colored shadow neighbours.
    pub fallback_events: u64,
}

enum Phase {
    Greedy,
    Forest { shadow: ShadowGraph, forest: ForestGame, last_bob: Option<u32>, bound: u32 },
    Degraded,
}

/// Greedy until few vertices remain uncolored and all of them still have
/// many available colors; then a forest marking strategy on the light
/// part of the 2-shadow of the remaining vertices.
pub struct TwoPhase {
    d: f64,
    delta: f64,
    phase: Phase,
    report: PhaseTwoReport,
}

impl TwoPhase {
    pub fn new(d: f64, delta: f64) -> Self {
        TwoPhase { d, delta, phase: Phase::Greedy, report: PhaseTwoReport::default() }
    }

    pub fn report(&self) -> &PhaseTwoReport {
        &self.report
    }

    /// At most `2γn` uncolored vertices, each with at least `β/2` available colors.
    pub fn switch_due(state: &GameState<'_>, params: &DecompositionParams) -> bool {
        state.uncolored_count() as f64 <= 2.0 * params.gamma * params.n as f64
            && state.min_availability().is_some_and(|a| a as f64 >= params.beta / 2.0)
    }

    fn degrade(&mut self, reason: String) {
        log::info!("two-phase strategy continues greedily: {reason}");
        self.report.failure = Some(reason);
        self.phase = Phase::Degraded;
    }

    fn try_switch(&mut self, state: &GameState<'_>) {
        let params = match DecompositionParams::new(state.graph().n(), self.d, state.q(), self.delta) {
            Ok(p) => p,
            Err(e) => return self.degrade(e.to_string()),
        };
        if !TwoPhase::switch_due(state, &params) {
            return;
        }
        let uncolored: Vec<u32> = state.uncolored_vertices().collect();
        self.report.switched_at_move = Some(state.history().len());
        self.report.uncolored_at_switch = uncolored.len();
        let shadow = match state.graph().shadow_graph(&uncolored) {
            Ok(s) => s,
            Err(e) => return self.degrade(e.to_string()),
        };
        let dec = match build_decomposition(&shadow, &params) {
            Ok(d) => d,
            Err(e) => return self.degrade(e.to_string()),
        };
        self.report.level_sizes = dec.levels().iter().map(|l| l.members.len()).collect();
        self.report.light_edges = dec.count(EdgeLabel::Light);
        self.report.heavy_edges = dec.count(EdgeLabel::Heavy);
        self.report.cycle = dec.cycle().is_some();
        let forest = match ForestGame::new(shadow.vertex_space(), &uncolored, &dec.phi_edges(), dec.cycle()) {
            Ok(f) => f,
            Err(e) => return self.degrade(format!("light edges do not form a forest: {e}")),
        };
        self.report.decomposition_verified = true;
        let bound = 3 + u32::from(dec.cycle().is_some());
        self.phase = Phase::Forest { shadow, forest, last_bob: None, bound };
    }
}

impl Strategy for TwoPhase {
    fn name(&self) -> &'static str {
        "alice:two-phase"
    }

    fn choose(&mut self, state: &GameState<'_>, _rng: &mut GameRng) -> (u32, Color) {
        if matches!(self.phase, Phase::Greedy) {
            self.try_switch(state);
        }
        let Phase::Forest { shadow, forest, last_bob, .. } = &mut self.phase else {
            return Greedy::pick(state);
        };
        let Some(v) = forest.respond(last_bob.take()).filter(|&v| !state.is_colored(v)) else {
            return Greedy::pick(state);
        };
        let clash = |c: Color| shadow.neighbors(v).iter().any(|&w| state.color_of(w) == Some(c));
        match state.available_colors(v).find(|&c| !clash(c)) {
            Some(c) => (v, c),
            None => {
                self.report.fallback_events += 1;
                let c = state.lowest_available_color(v).expect("running game has no dead vertex");
                (v, c)
            }
        }
    }

    fn observe(&mut self, _state: &GameState<'_>, mv: Move) {
        if let Phase::Forest { forest, last_bob, bound, .. } = &mut self.phase {
            if forest.contains(mv.vertex) {
                let seen = forest.marked_neighbours(mv.vertex) as u32;
                self.report.coloring_events += 1;
                self.report.max_colored_phi_neighbours = self.report.max_colored_phi_neighbours.max(seen);
                if seen > *bound {
                    self.report.bound_violations += 1;
                }
                forest.mark(mv.vertex);
            }
            if mv.player == Player::B {
                *last_bob = Some(mv.vertex);
            }
        }
    }

    fn phase_two(&self) -> Option<&PhaseTwoReport> {
        Some(&self.report)
    }
}
