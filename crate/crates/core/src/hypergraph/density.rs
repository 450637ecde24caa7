//! Density statistics of vertex subsets in 3-uniform hypergraphs.

use std::collections::HashSet;

use super::{Hypergraph, HypergraphError};

/// `e3`: edges inside S. `e2`: pairs inside S completed to an edge by a
/// vertex outside S (each pair counted once).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DensityStats {
    pub e3: usize,
    pub e2: usize,
}

impl Hypergraph {
    pub fn density_stats(&self, subset: &[u32]) -> Result<DensityStats, HypergraphError> {
        self.require_three_uniform()?;
        let inside = self.vertex_set(subset)?;
        let mut e3 = 0;
        let mut pairs = HashSet::new();
        for v in inside.iter() {
            for &e in self.incident(v) {
                let edge = self.edge(e as usize);
                let members: Vec<u32> = edge.iter().copied().filter(|&x| inside.contains(x)).collect();
                // Visit each edge once, from its smallest member in S.
                if members[0] != v {
                    continue;
                }
                match members.len() {
                    3 => e3 += 1,
                    2 => {
                        pairs.insert((members[0], members[1]));
                    }
                    _ => {}
                }
            }
        }
        Ok(DensityStats { e3, e2: pairs.len() })
    }

    /// `d_{S,j}(v)`: edges `{v, x, y}` with exactly `j` of `x, y` in S.
    /// Membership of `v` itself is ignored.
    pub fn partial_degree(&self, subset: &[u32], v: u32, j: usize) -> Result<usize, HypergraphError> {
        self.require_three_uniform()?;
        let inside = self.vertex_set(subset)?;
        if v as usize >= self.n() {
            return Err(HypergraphError::BadVertex { vertex: v, n: self.n() });
        }
        Ok(self.partial_degree_in(&inside, v, j))
    }

    pub(crate) fn partial_degree_in(&self, inside: &crate::bitset::VertexSet, v: u32, j: usize) -> usize {
        self.incident(v)
            .iter()
            .filter(|&&e| {
                let hits = self.edge(e as usize).iter().filter(|&&x| x != v && inside.contains(x)).count();
                hits == j
            })
            .count()
    }
}
