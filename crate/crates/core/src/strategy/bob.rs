use rand::Rng;

use super::{uniform_legal_move, Strategy};
use crate::game::{Color, GameState};
use crate::rng::GameRng;

/// Repeats the color of the previous move on a uniformly random uncolored
/// vertex where it is still available. When no such vertex exists (or
/// there is no previous move), colors a uniformly random uncolored vertex
/// with a uniformly random available color.
#[derive(Clone, Copy, Debug, Default)]
pub struct Mirror;

impl Mirror {
    fn fallback(state: &GameState<'_>, rng: &mut GameRng) -> (u32, Color) {
        let uncolored: Vec<u32> = state.uncolored_vertices().collect();
        let v = uncolored[rng.random_range(0..uncolored.len())];
        let colors: Vec<Color> = state.available_colors(v).collect();
        (v, colors[rng.random_range(0..colors.len())])
    }
}

impl Strategy for Mirror {
    fn name(&self) -> &'static str {
        "bob:mirror"
    }

    fn choose(&mut self, state: &GameState<'_>, rng: &mut GameRng) -> (u32, Color) {
        if let Some(last) = state.last_move() {
            let set = state.candidates(last.color);
            if !set.is_empty() {
                let v = set.select(rng.random_range(0..set.len())).expect("rank within set");
                return (v, last.color);
            }
        }
        Mirror::fallback(state, rng)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct UniformRandom;

impl Strategy for UniformRandom {
    fn name(&self) -> &'static str {
        "bob:random"
    }

    fn choose(&mut self, state: &GameState<'_>, rng: &mut GameRng) -> (u32, Color) {
        uniform_legal_move(state, rng)
    }
}

/// Plays the move that minimizes the minimum availability among the
/// vertices left uncolored afterwards; ties go to the lowest vertex, then
/// the lowest color.
#[derive(Clone, Copy, Debug, Default)]
pub struct Block;

impl Block {
    pub fn pick(state: &GameState<'_>) -> (u32, Color) {
        let g = state.graph();
        let k = g.k();
        let q = state.q();
        let floor = state.min_availability().expect("running game").saturating_sub(1);
        let mut best: Option<(usize, u32, Color)> = None;
        let mut hit = vec![usize::MAX; q + 1];
        for v in state.uncolored_vertices() {
            let others = min_excluding(state, v);
            // Smallest availability among vertices that would lose color c.
            hit.iter_mut().for_each(|h| *h = usize::MAX);
            for &e in g.incident(v) {
                let edge = g.edge(e as usize);
                let mut other_open = None;
                let mut open = 0;
                let mut shade: Option<Color> = None;
                let mut uniform = true;
                for &u in edge {
                    if u == v {
                        continue;
                    }
                    match state.color_of(u) {
                        None => {
                            open += 1;
                            other_open = Some(u);
                        }
                        Some(c) => match shade {
                            None => shade = Some(c),
                            Some(s) if s != c => uniform = false,
                            _ => {}
                        },
                    }
                }
                if open != 1 || !uniform {
                    continue;
                }
                let u = other_open.expect("one open vertex");
                // With k = 2 the edge {v, u} blocks every color v takes.
                let colors: Vec<Color> = match shade {
                    Some(c) => vec![c],
                    None if k == 2 => (1..=q as Color).collect(),
                    None => continue,
                };
                for c in colors {
                    if state.is_available(u, c) {
                        let a = state.availability(u) - 1;
                        hit[c as usize] = hit[c as usize].min(a);
                    }
                }
            }
            for c in state.available_colors(v) {
                let value = others.min(hit[c as usize]);
                if best.is_none_or(|(b, _, _)| value < b) {
                    best = Some((value, v, c));
                }
            }
            if best.is_some_and(|(b, _, _)| b <= floor) {
                break;
            }
        }
        let (_, v, c) = best.expect("running game has a legal move");
        (v, c)
    }
}

/// Minimum availability over uncolored vertices other than `v`
/// (`usize::MAX` when there are none).
fn min_excluding(state: &GameState<'_>, v: u32) -> usize {
    for a in 0..=state.q() {
        let bucket = state.vertices_with_availability(a);
        if bucket.len() > usize::from(bucket.contains(v)) {
            return a;
        }
    }
    usize::MAX
}

impl Strategy for Block {
    fn name(&self) -> &'static str {
        "bob:block"
    }

    fn choose(&mut self, state: &GameState<'_>, _rng: &mut GameRng) -> (u32, Color) {
        Block::pick(state)
    }
}
