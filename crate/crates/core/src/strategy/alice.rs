use super::Strategy;
use crate::game::{Color, GameState};
use crate::rng::GameRng;

/// Colors the lowest-index vertex of minimum availability with its lowest
/// available color.
#[derive(Clone, Copy, Debug, Default)]
pub struct Greedy;

impl Greedy {
    pub fn pick(state: &GameState<'_>) -> (u32, Color) {
        let v = state.min_availability_vertex().expect("running game has an uncolored vertex");
        let c = state.lowest_available_color(v).expect("running game has no dead vertex");
        (v, c)
    }
}

impl Strategy for Greedy {
    fn name(&self) -> &'static str {
        "alice:greedy"
    }

    fn choose(&mut self, state: &GameState<'_>, _rng: &mut GameRng) -> (u32, Color) {
        Greedy::pick(state)
    }
}
