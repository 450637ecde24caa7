//! Exact game values on tiny instances.

use std::collections::HashMap;

use thiserror::Error;

use crate::game::{AssignmentError, Color, GameError, GameState, Player, Status};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("A wins with {q} colors but loses with {next}")]
    NotMonotone { q: usize, next: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub node_budget: u64,
    /// Explore moves in descending instead of ascending order.
    pub reverse_order: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { node_budget: DEFAULT_NODE_BUDGET, reverse_order: false }
    }
}

/// A partial coloring up to renaming of colors, plus whose turn it is.
/// Colors are renamed in order of their first appearance along the vertex
/// order, which sorts the color classes lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalKey {
    classes: Vec<u8>,
    turn: Player,
}

impl CanonicalKey {
    pub fn of(state: &GameState<'_>) -> Self {
        let mut rename = vec![0u8; state.q() + 1];
        let mut next = 0u8;
        let classes = state
            .colors()
            .iter()
            .map(|&c| {
                if c == 0 {
                    return 0;
                }
                if rename[c as usize] == 0 {
                    next += 1;
                    rename[c as usize] = next;
                }
                rename[c as usize]
            })
            .collect();
        CanonicalKey { classes, turn: state.turn() }
    }

    /// Color classes as sorted vertex lists, in canonical order.
    pub fn classes(&self) -> Vec<Vec<u32>> {
        let count = self.classes.iter().copied().max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); count];
        for (v, &c) in self.classes.iter().enumerate() {
            if c > 0 {
                out[c as usize - 1].push(v as u32);
            }
        }
        out
    }

    pub fn turn(&self) -> Player {
        self.turn
    }

    /// A state with this key: class `i` gets color `i + 1`.
    pub fn representative<'h>(&self, graph: &'h Hypergraph, q: usize) -> Result<GameState<'h>, AssignmentError> {
        let colors: Vec<Color> = self.classes.iter().map(|&c| Color::from(c)).collect();
        GameState::from_assignment(graph, q, &colors)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solution {
    pub winner: Player,
    pub nodes: u64,
    pub memo_entries: usize,
}

struct Search {
    memo: HashMap<CanonicalKey, bool>,
    nodes: u64,
    config: SolverConfig,
}

impl Search {
    fn a_wins(&mut self, state: &mut GameState<'_>) -> Result<bool, SolveError> {
        match state.status() {
            Status::AWon => return Ok(true),
            Status::BWon { .. } => return Ok(false),
            Status::InProgress => {}
        }
        let key = CanonicalKey::of(state);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        if self.nodes > self.config.node_budget {
            return Err(SolveError::BudgetExceeded { budget: self.config.node_budget });
        }
        let player = state.turn();
        let mut moves = symmetry_reduced_moves(state);
        if self.config.reverse_order {
            moves.reverse();
        }
        // A needs one winning child; B needs one losing child.
        let want = player == Player::A;
        let mut result = !want;
        for (v, c) in moves {
            state.apply_move(v, c, player).expect("legal move");
            let child = self.a_wins(state);
            state.undo();
            if child? == want {
                result = want;
                break;
            }
        }
        self.memo.insert(key, result);
        Ok(result)
    }
}

/// Legal moves with all unused colors collapsed onto the lowest one.
fn symmetry_reduced_moves(state: &GameState<'_>) -> Vec<(u32, Color)> {
    let first_unused = (1..=state.q() as Color).find(|&c| state.class(c).is_empty());
    state
        .legal_moves()
        .into_iter()
        .filter(|&(_, c)| !state.class(c).is_empty() || Some(c) == first_unused)
        .collect()
}

/// Winner of the q-coloring game on `graph` under optimal play.
pub fn solve(graph: &Hypergraph, q: usize, config: SolverConfig) -> Result<Solution, SolveError> {
    let mut state = GameState::new(graph, q)?;
    let mut search = Search { memo: HashMap::new(), nodes: 0, config };
    let a = search.a_wins(&mut state)?;
    Ok(Solution {
        winner: if a { Player::A } else { Player::B },
        nodes: search.nodes,
        memo_entries: search.memo.len(),
    })
}

/// Least `q <= q_max` for which A wins, or `None` if there is none. The
/// answer is cross-checked by also solving `q + 1`.
pub fn game_chromatic_number(graph: &Hypergraph, q_max: usize, config: SolverConfig) -> Result<Option<usize>, SolveError> {
    for q in 1..=q_max {
        if solve(graph, q, config)?.winner == Player::A {
            if solve(graph, q + 1, config)?.winner != Player::A {
                return Err(SolveError::NotMonotone { q, next: q + 1 });
            }
            return Ok(Some(q));
        }
    }
    Ok(None)
}

/// Least number of colors admitting a coloring with no monochromatic edge.
pub fn chromatic_number(graph: &Hypergraph, node_budget: u64) -> Result<usize, SolveError> {
    let mut nodes = 0u64;
    for q in 1..=graph.n().max(1) {
        let mut colors = vec![0 as Color; graph.n()];
        if extend(graph, &mut colors, 0, q as Color, 0, &mut nodes, node_budget)? {
            return Ok(q);
        }
    }
    unreachable!("n colors always suffice")
}

fn extend(
    graph: &Hypergraph,
    colors: &mut [Color],
    v: usize,
    q: Color,
    used: Color,
    nodes: &mut u64,
    budget: u64,
) -> Result<bool, SolveError> {
    if v == colors.len() {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(SolveError::BudgetExceeded { budget });
    }
    // Colors beyond the first unused one are symmetric.
    for c in 1..=q.min(used + 1) {
        colors[v] = c;
        let clash = graph.incident(v as u32).iter().any(|&e| graph.edge(e as usize).iter().all(|&u| colors[u as usize] == c));
        if !clash && extend(graph, colors, v + 1, q, used.max(c), nodes, budget)? {
            return Ok(true);
        }
    }
    colors[v] = 0;
    Ok(false)
}
