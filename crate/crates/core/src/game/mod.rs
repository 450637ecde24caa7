//! Game state for the q-coloring game on a k-uniform hypergraph.
//!
//! Every move touches only the edges through the colored vertex. The state
//! keeps, per edge and color, how many vertices carry that color, and per
//! vertex and color, how many edges have all their other vertices in that
//! color (`blocked`). Color `c` is available at `v` iff `blocked[v][c] == 0`.

mod play;

pub use play::{play_game, Forfeit, GameOutcome, TraceLine};

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::VertexSet;
use crate::hypergraph::Hypergraph;

/// Colors are `1..=q`; `0` never denotes a color.
pub type Color = u16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    A,
    B,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::A => Player::B,
            Player::B => Player::A,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::A => "A",
            Player::B => "B",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub vertex: u32,
    pub color: Color,
    pub player: Player,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    InProgress,
    AWon,
    /// Some uncolored vertex has no available color.
    BWon { dead: u32 },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("the game is already over")]
    GameOver,
    #[error("it is {expected}'s turn")]
    WrongTurn { expected: Player },
    #[error("vertex {0} does not exist")]
    NoSuchVertex(u32),
    #[error("vertex {0} is already colored")]
    AlreadyColored(u32),
    #[error("color {color} outside 1..={q}")]
    NoSuchColor { color: Color, q: usize },
    #[error("color {color} is not available at vertex {vertex}")]
    Unavailable { vertex: u32, color: Color },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GameError {
    #[error("at least one color is required")]
    NoColors,
    #[error("at most {max} colors are supported, got {q}")]
    TooManyColors { q: usize, max: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AssignmentError {
    #[error(transparent)]
    Game(#[from] GameError),
    #[error("assignment has {found} entries for {expected} vertices")]
    Length { expected: usize, found: usize },
    #[error(transparent)]
    Move(MoveError),
}

#[derive(Clone)]
pub struct GameState<'h> {
    graph: &'h Hypergraph,
    q: usize,
    colors: Vec<Color>,
    movers: Vec<Option<Player>>,
    /// `same[e * q + c - 1]`: vertices of edge `e` colored `c`.
    same: Vec<u8>,
    /// Uncolored vertices per edge.
    open: Vec<u8>,
    /// `blocked[v * q + c - 1]`: edges through `v` whose other vertices are all colored `c`.
    blocked: Vec<u32>,
    avail: Vec<u32>,
    classes: Vec<Vec<u32>>,
    /// Uncolored vertices bucketed by availability.
    by_avail: Vec<VertexSet>,
    /// Uncolored vertices at which each color is available.
    by_color: Vec<VertexSet>,
    history: Vec<Move>,
    status: Status,
    uncolored: usize,
}

impl PartialEq for GameState<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.graph, other.graph)
            && self.q == other.q
            && self.colors == other.colors
            && self.movers == other.movers
            && self.same == other.same
            && self.open == other.open
            && self.blocked == other.blocked
            && self.avail == other.avail
            && self.classes == other.classes
            && self.by_avail == other.by_avail
            && self.by_color == other.by_color
            && self.history == other.history
            && self.status == other.status
            && self.uncolored == other.uncolored
    }
}

impl fmt::Debug for GameState<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameState")
            .field("q", &self.q)
            .field("colors", &self.colors)
            .field("status", &self.status)
            .field("moves", &self.history.len())
            .finish()
    }
}

impl<'h> GameState<'h> {
    pub fn new(graph: &'h Hypergraph, q: usize) -> Result<Self, GameError> {
        if q == 0 {
            return Err(GameError::NoColors);
        }
        if q > Color::MAX as usize {
            return Err(GameError::TooManyColors { q, max: Color::MAX as usize });
        }
        let n = graph.n();
        let mut by_avail = vec![VertexSet::new(n); q + 1];
        by_avail[q] = VertexSet::full(n);
        Ok(GameState {
            graph,
            q,
            colors: vec![0; n],
            movers: vec![None; n],
            same: vec![0; graph.edge_count() * q],
            open: vec![graph.k() as u8; graph.edge_count()],
            blocked: vec![0; n * q],
            avail: vec![q as u32; n],
            classes: vec![Vec::new(); q],
            by_avail,
            by_color: vec![VertexSet::full(n); q],
            history: Vec::new(),
            status: Status::InProgress,
            uncolored: n,
        })
    }

    /// State holding the partial assignment `colors` (`0` = uncolored),
    /// as if the colored vertices had been played in ascending order by
    /// alternating players starting with A.
    pub fn from_assignment(graph: &'h Hypergraph, q: usize, colors: &[Color]) -> Result<Self, AssignmentError> {
        let mut s = GameState::new(graph, q)?;
        if colors.len() != graph.n() {
            return Err(AssignmentError::Length { expected: graph.n(), found: colors.len() });
        }
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c as usize > q {
                return Err(AssignmentError::Move(MoveError::NoSuchColor { color: c, q }));
            }
            if !s.is_available(v as u32, c) {
                return Err(AssignmentError::Move(MoveError::Unavailable { vertex: v as u32, color: c }));
            }
            let player = s.turn();
            s.assign(v as u32, c);
            s.movers[v] = Some(player);
            s.history.push(Move { vertex: v as u32, color: c, player });
        }
        s.status = if let Some(dead) = s.by_avail[0].first() {
            Status::BWon { dead }
        } else if s.uncolored == 0 {
            Status::AWon
        } else {
            Status::InProgress
        };
        Ok(s)
    }

    pub fn graph(&self) -> &'h Hypergraph {
        self.graph
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_over(&self) -> bool {
        self.status != Status::InProgress
    }

    /// Whose move it is; A moves first.
    pub fn turn(&self) -> Player {
        if self.history.len() % 2 == 0 {
            Player::A
        } else {
            Player::B
        }
    }

    pub fn history(&self) -> &[Move] {
        &self.history
    }

    pub fn last_move(&self) -> Option<Move> {
        self.history.last().copied()
    }

    pub fn color_of(&self, v: u32) -> Option<Color> {
        match self.colors[v as usize] {
            0 => None,
            c => Some(c),
        }
    }

    pub fn mover_of(&self, v: u32) -> Option<Player> {
        self.movers[v as usize]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn is_colored(&self, v: u32) -> bool {
        self.colors[v as usize] != 0
    }

    pub fn uncolored_count(&self) -> usize {
        self.uncolored
    }

    /// Vertices colored `c`, in the order they were colored.
    pub fn class(&self, c: Color) -> &[u32] {
        &self.classes[c as usize - 1]
    }

    /// `a(v, C)`: number of colors available at `v`.
    pub fn availability(&self, v: u32) -> usize {
        self.avail[v as usize] as usize
    }

    pub fn is_available(&self, v: u32, c: Color) -> bool {
        self.blocked[v as usize * self.q + c as usize - 1] == 0
    }

    /// Available colors at `v`, ascending.
    pub fn available_colors(&self, v: u32) -> impl Iterator<Item = Color> + '_ {
        let row = &self.blocked[v as usize * self.q..(v as usize + 1) * self.q];
        row.iter().enumerate().filter(|(_, &b)| b == 0).map(|(i, _)| i as Color + 1)
    }

    pub fn lowest_available_color(&self, v: u32) -> Option<Color> {
        self.available_colors(v).next()
    }

    /// Minimum availability over uncolored vertices.
    pub fn min_availability(&self) -> Option<usize> {
        self.by_avail.iter().position(|b| !b.is_empty())
    }

    /// Lowest-index uncolored vertex attaining the minimum availability.
    pub fn min_availability_vertex(&self) -> Option<u32> {
        self.by_avail.iter().find(|b| !b.is_empty()).and_then(VertexSet::first)
    }

    /// Uncolored vertices with availability exactly `a`.
    pub fn vertices_with_availability(&self, a: usize) -> &VertexSet {
        &self.by_avail[a]
    }

    /// Uncolored vertices at which `c` is available.
    pub fn candidates(&self, c: Color) -> &VertexSet {
        &self.by_color[c as usize - 1]
    }

    /// Total number of legal moves.
    pub fn legal_move_count(&self) -> usize {
        if self.is_over() {
            return 0;
        }
        self.by_color.iter().map(VertexSet::len).sum()
    }

    /// All `(vertex, color)` pairs that may be played now, vertex-major.
    pub fn legal_moves(&self) -> Vec<(u32, Color)> {
        if self.is_over() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for v in 0..self.graph.n() as u32 {
            if !self.is_colored(v) {
                out.extend(self.available_colors(v).map(|c| (v, c)));
            }
        }
        out
    }

    pub fn uncolored_vertices(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.graph.n() as u32).filter(|&v| !self.is_colored(v))
    }

    pub fn check_move(&self, vertex: u32, color: Color, player: Player) -> Result<(), MoveError> {
        if self.is_over() {
            return Err(MoveError::GameOver);
        }
        if player != self.turn() {
            return Err(MoveError::WrongTurn { expected: self.turn() });
        }
        if vertex as usize >= self.graph.n() {
            return Err(MoveError::NoSuchVertex(vertex));
        }
        if self.is_colored(vertex) {
            return Err(MoveError::AlreadyColored(vertex));
        }
        if color == 0 || color as usize > self.q {
            return Err(MoveError::NoSuchColor { color, q: self.q });
        }
        if !self.is_available(vertex, color) {
            return Err(MoveError::Unavailable { vertex, color });
        }
        Ok(())
    }

    /// Colors `vertex` with `color` on behalf of `player`. Rejected moves
    /// leave the state untouched.
    pub fn apply_move(&mut self, vertex: u32, color: Color, player: Player) -> Result<Status, MoveError> {
        self.check_move(vertex, color, player)?;
        self.assign(vertex, color);
        self.movers[vertex as usize] = Some(player);
        self.history.push(Move { vertex, color, player });
        self.status = if let Some(dead) = self.by_avail[0].first() {
            Status::BWon { dead }
        } else if self.uncolored == 0 {
            Status::AWon
        } else {
            Status::InProgress
        };
        Ok(self.status)
    }

    /// Reverts the most recent move.
    pub fn undo(&mut self) -> Option<Move> {
        let mv = self.history.pop()?;
        self.unassign(mv.vertex);
        self.movers[mv.vertex as usize] = None;
        self.status = Status::InProgress;
        Some(mv)
    }

    fn set_blocked(&mut self, u: u32, c: Color, delta: i32) {
        let idx = u as usize * self.q + c as usize - 1;
        let before = self.blocked[idx];
        let after = (before as i32 + delta) as u32;
        self.blocked[idx] = after;
        if (before == 0) == (after == 0) {
            return;
        }
        let uncolored = self.colors[u as usize] == 0;
        let a = self.avail[u as usize] as usize;
        if after == 0 {
            self.avail[u as usize] += 1;
            if uncolored {
                self.by_avail[a].remove(u);
                self.by_avail[a + 1].insert(u);
                self.by_color[c as usize - 1].insert(u);
            }
        } else {
            self.avail[u as usize] -= 1;
            if uncolored {
                self.by_avail[a].remove(u);
                self.by_avail[a - 1].insert(u);
                self.by_color[c as usize - 1].remove(u);
            }
        }
    }

    fn assign(&mut self, v: u32, c: Color) {
        let graph = self.graph;
        let k = graph.k() as u8;
        let ci = c as usize - 1;
        self.by_avail[self.avail[v as usize] as usize].remove(v);
        for set in &mut self.by_color {
            set.remove(v);
        }
        self.colors[v as usize] = c;
        self.uncolored -= 1;
        self.classes[ci].push(v);
        for &e in graph.incident(v) {
            let e = e as usize;
            self.open[e] -= 1;
            let slot = e * self.q + ci;
            self.same[slot] += 1;
            let after = self.same[slot];
            for &u in graph.edge(e) {
                if u == v {
                    continue;
                }
                let others = after - u8::from(self.colors[u as usize] == c);
                if others == k - 1 {
                    self.set_blocked(u, c, 1);
                }
            }
        }
    }

    fn unassign(&mut self, v: u32) {
        let graph = self.graph;
        let k = graph.k() as u8;
        let c = self.colors[v as usize];
        let ci = c as usize - 1;
        for &e in graph.incident(v) {
            let e = e as usize;
            let slot = e * self.q + ci;
            let current = self.same[slot];
            for &u in graph.edge(e) {
                if u == v {
                    continue;
                }
                let others = current - u8::from(self.colors[u as usize] == c);
                if others == k - 1 {
                    self.set_blocked(u, c, -1);
                }
            }
            self.same[slot] -= 1;
            self.open[e] += 1;
        }
        let popped = self.classes[ci].pop();
        debug_assert_eq!(popped, Some(v));
        self.colors[v as usize] = 0;
        self.uncolored += 1;
        self.by_avail[self.avail[v as usize] as usize].insert(v);
        for cc in 0..self.q {
            if self.blocked[v as usize * self.q + cc] == 0 {
                self.by_color[cc].insert(v);
            }
        }
    }

    /// Rebuilds every derived structure from the assignment alone and
    /// reports the first disagreement with the incremental state.
    pub fn verify_consistency(&self) -> Result<(), String> {
        let g = self.graph;
        let (n, q, k) = (g.n(), self.q, g.k());
        let mut same = vec![0u8; g.edge_count() * q];
        let mut open = vec![0u8; g.edge_count()];
        for (e, edge) in g.edges().enumerate() {
            for &v in edge {
                match self.colors[v as usize] {
                    0 => open[e] += 1,
                    c => same[e * q + c as usize - 1] += 1,
                }
            }
        }
        if same != self.same {
            return Err("per-edge color counters differ".into());
        }
        if open != self.open {
            return Err("per-edge uncolored counters differ".into());
        }
        for v in 0..n as u32 {
            for c in 1..=q as Color {
                let expected = g
                    .incident(v)
                    .iter()
                    .filter(|&&e| g.edge(e as usize).iter().all(|&u| u == v || self.colors[u as usize] == c))
                    .count() as u32;
                if self.blocked[v as usize * q + c as usize - 1] != expected {
                    return Err(format!("blocked count of vertex {v}, color {c} differs"));
                }
                let candidate = self.colors[v as usize] == 0 && expected == 0;
                if self.by_color[c as usize - 1].contains(v) != candidate {
                    return Err(format!("candidate set of color {c} wrong at vertex {v}"));
                }
            }
            let a = (1..=q as Color).filter(|&c| self.blocked[v as usize * q + c as usize - 1] == 0).count();
            if self.avail[v as usize] as usize != a {
                return Err(format!("availability of vertex {v} differs"));
            }
            for (bucket, set) in self.by_avail.iter().enumerate() {
                let expected = self.colors[v as usize] == 0 && bucket == a;
                if set.contains(v) != expected {
                    return Err(format!("availability bucket {bucket} wrong at vertex {v}"));
                }
            }
        }
        let uncolored = self.colors.iter().filter(|&&c| c == 0).count();
        if uncolored != self.uncolored {
            return Err("uncolored count differs".into());
        }
        let class_total: usize = self.classes.iter().map(Vec::len).sum();
        if class_total + uncolored != n {
            return Err("color classes do not partition the colored vertices".into());
        }
        for (ci, class) in self.classes.iter().enumerate() {
            if class.iter().any(|&v| self.colors[v as usize] as usize != ci + 1) {
                return Err(format!("class {} holds a vertex of another color", ci + 1));
            }
        }
        if same.iter().any(|&s| s as usize == k) {
            return Err("monochromatic edge".into());
        }
        Ok(())
    }
}
