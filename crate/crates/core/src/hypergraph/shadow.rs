//! The 2-shadow `G_U` of a 3-uniform hypergraph restricted to a vertex set.

use super::{Hypergraph, HypergraphError};
use crate::bitset::VertexSet;

const ABSENT: u32 = u32::MAX;

/// Graph on `U` joining `x, y` whenever some edge `{x, y, z}` exists; the
/// witness `z` may lie outside `U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowGraph {
    universe: Vec<u32>,
    members: VertexSet,
    local: Vec<u32>,
    adjacency: Vec<Vec<u32>>,
    /// `((x, y), edge)` with `x < y`, sorted.
    witnesses: Vec<((u32, u32), u32)>,
}

impl ShadowGraph {
    pub fn new(h: &Hypergraph, universe: &[u32]) -> Result<Self, HypergraphError> {
        h.require_three_uniform()?;
        let members = h.vertex_set(universe)?;
        let universe: Vec<u32> = members.iter().collect();
        let mut local = vec![ABSENT; h.n()];
        for (i, &v) in universe.iter().enumerate() {
            local[v as usize] = i as u32;
        }
        let mut witnesses = Vec::new();
        for &x in &universe {
            for &e in h.incident(x) {
                for &y in h.edge(e as usize) {
                    if y > x && members.contains(y) {
                        witnesses.push(((x, y), e));
                    }
                }
            }
        }
        witnesses.sort_unstable();
        let mut adjacency = vec![Vec::new(); universe.len()];
        let mut last = None;
        for &((x, y), _) in &witnesses {
            if last != Some((x, y)) {
                adjacency[local[x as usize] as usize].push(y);
                adjacency[local[y as usize] as usize].push(x);
                last = Some((x, y));
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(ShadowGraph { universe, members, local, adjacency, witnesses })
    }

    /// Members of `U`, ascending.
    pub fn universe(&self) -> &[u32] {
        &self.universe
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        (v as usize) < self.local.len() && self.local[v as usize] != ABSENT
    }

    pub fn members(&self) -> &VertexSet {
        &self.members
    }

    /// Capacity of the underlying vertex space (the hypergraph's `n`).
    pub fn vertex_space(&self) -> usize {
        self.local.len()
    }

    /// Neighbours of `v` in `U`, ascending; empty when `v` is not in `U`.
    pub fn neighbors(&self, v: u32) -> &[u32] {
        match self.local.get(v as usize) {
            Some(&i) if i != ABSENT => &self.adjacency[i as usize],
            _ => &[],
        }
    }

    /// Shadow degree `d_U(v)`.
    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    /// Neighbours of `v` inside `subset`.
    pub fn degree_into(&self, v: u32, subset: &VertexSet) -> usize {
        self.neighbors(v).iter().filter(|&&w| subset.contains(w)).count()
    }

    pub fn adjacent(&self, x: u32, y: u32) -> bool {
        self.neighbors(x).binary_search(&y).is_ok()
    }

    /// Hypergraph edges containing both `x` and `y`.
    pub fn witnesses(&self, x: u32, y: u32) -> Vec<u32> {
        let key = (x.min(y), x.max(y));
        let start = self.witnesses.partition_point(|(p, _)| *p < key);
        self.witnesses[start..].iter().take_while(|(p, _)| *p == key).map(|&(_, e)| e).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Every shadow edge once, as `(x, y)` with `x < y`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.universe
            .iter()
            .zip(&self.adjacency)
            .flat_map(|(&x, nbrs)| nbrs.iter().filter(move |&&y| y > x).map(move |&y| (x, y)))
    }
}

impl Hypergraph {
    pub fn shadow_graph(&self, universe: &[u32]) -> Result<ShadowGraph, HypergraphError> {
        ShadowGraph::new(self, universe)
    }
}
