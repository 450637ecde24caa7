//! Activation strategy for the first player of the marking game on a
//! forest. Vertices are ordered by breadth-first search from each root so
//! that every vertex is preceded by its parent. When the opponent marks a
//! vertex, the responder climbs towards the root activating vertices and
//! marks the first already-active one it meets. Every vertex then has at
//! most three marked neighbours (its parent and two children) at the
//! moment it is marked; one extra non-tree edge adds at most one more.

use std::collections::VecDeque;

use crate::bitset::VertexSet;

const NONE: u32 = u32::MAX;

#[derive(Clone, Debug)]
pub struct ForestGame {
    order: Vec<u32>,
    parent: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    members: VertexSet,
    active: VertexSet,
    marked: VertexSet,
    cursor: usize,
    /// The non-tree edge, if the graph had one cycle.
    extra: Option<(u32, u32)>,
}

impl ForestGame {
    /// `edges` must form a forest on `vertices`, or a forest plus one edge
    /// closing the cycle `cycle`. The cycle's component is rooted at its
    /// lowest cycle vertex and placed first in the order; every other
    /// component is rooted at its lowest vertex.
    pub fn new(space: usize, vertices: &[u32], edges: &[(u32, u32)], cycle: Option<&[u32]>) -> Result<Self, String> {
        let mut members = VertexSet::new(space);
        for &v in vertices {
            members.insert(v);
        }
        let mut adjacency = vec![Vec::new(); space];
        for &(x, y) in edges {
            if !members.contains(x) || !members.contains(y) {
                return Err(format!("edge {{{x},{y}}} leaves the vertex set"));
            }
            adjacency[x as usize].push(y);
            adjacency[y as usize].push(x);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let extra = match cycle {
            Some(c) => {
                let root = *c.iter().min().ok_or("empty cycle")?;
                let next = adjacency[root as usize]
                    .iter()
                    .copied()
                    .find(|w| c.contains(w))
                    .ok_or("cycle root has no cycle neighbour")?;
                Some((root, next))
            }
            None => None,
        };

        let mut parent = vec![NONE; space];
        let mut seen = VertexSet::new(space);
        let mut order = Vec::with_capacity(vertices.len());
        let mut roots: Vec<u32> = extra.map(|(r, _)| r).into_iter().collect();
        roots.extend(vertices.iter().copied());
        let mut tree_edges = 0usize;
        for root in roots {
            if !seen.insert(root) {
                continue;
            }
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &adjacency[v as usize] {
                    if is_extra(extra, v, w) {
                        continue;
                    }
                    if seen.insert(w) {
                        parent[w as usize] = v;
                        tree_edges += 1;
                        queue.push_back(w);
                    } else if parent[v as usize] != w {
                        return Err(format!("edge {{{v},{w}}} closes a second cycle"));
                    }
                }
            }
        }
        let expected = edges.len() - usize::from(extra.is_some());
        if tree_edges != expected {
            return Err(format!("{} tree edges for {expected} non-cycle edges", tree_edges));
        }
        Ok(ForestGame {
            order,
            parent,
            adjacency,
            members,
            active: VertexSet::new(space),
            marked: VertexSet::new(space),
            cursor: 0,
            extra,
        })
    }

    pub fn contains(&self, v: u32) -> bool {
        self.members.contains(v)
    }

    pub fn order(&self) -> &[u32] {
        &self.order
    }

    pub fn parent(&self, v: u32) -> Option<u32> {
        match self.parent[v as usize] {
            NONE => None,
            p => Some(p),
        }
    }

    pub fn extra_edge(&self) -> Option<(u32, u32)> {
        self.extra
    }

    pub fn is_marked(&self, v: u32) -> bool {
        self.marked.contains(v)
    }

    /// Marked neighbours of `v`, counting the non-tree edge.
    pub fn marked_neighbours(&self, v: u32) -> usize {
        self.adjacency[v as usize].iter().filter(|&&w| self.marked.contains(w)).count()
    }

    /// Records that `v` was marked by either player.
    pub fn mark(&mut self, v: u32) {
        if self.members.contains(v) {
            self.marked.insert(v);
        }
    }

    /// The lowest unmarked vertex in the order, activated.
    pub fn free_move(&mut self) -> Option<u32> {
        while self.cursor < self.order.len() && self.marked.contains(self.order[self.cursor]) {
            self.cursor += 1;
        }
        let v = *self.order.get(self.cursor)?;
        self.active.insert(v);
        Some(v)
    }

    /// The vertex to mark after the opponent marked `last` (`None` for a
    /// free move).
    pub fn respond(&mut self, last: Option<u32>) -> Option<u32> {
        let Some(mut x) = last.filter(|&b| self.members.contains(b)) else {
            return self.free_move();
        };
        self.active.insert(x);
        loop {
            let up = self.parent(x).filter(|&p| !self.marked.contains(p));
            let target = match up {
                Some(p) => p,
                None if !self.marked.contains(x) => x,
                None => return self.free_move(),
            };
            if self.active.contains(target) {
                return Some(target);
            }
            self.active.insert(target);
            if target == x {
                return Some(x);
            }
            x = target;
        }
    }
}

fn is_extra(extra: Option<(u32, u32)>, v: u32, w: u32) -> bool {
    extra.is_some_and(|(a, b)| (a, b) == (v, w) || (a, b) == (w, v))
}
