//! k-uniform hypergraphs on vertices `0..n`.

mod density;
mod generate;
mod io;
mod shadow;

pub use density::DensityStats;
pub use generate::{binomial, colex_unrank};
pub use io::ParseError;
pub use shadow::ShadowGraph;

use std::collections::HashSet;

use thiserror::Error;

use crate::bitset::VertexSet;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HypergraphError {
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("need n >= k, got n = {n}, k = {k}")]
    TooFewVertices { n: usize, k: usize },
    #[error("edge {edge} has {found} vertices, expected {expected}")]
    Arity { edge: usize, expected: usize, found: usize },
    #[error("edge {edge} contains vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { edge: usize, vertex: u32, n: usize },
    #[error("edge {edge} is not strictly increasing")]
    Unsorted { edge: usize },
    #[error("edge {edge} duplicates an earlier edge")]
    Duplicate { edge: usize },
    #[error("density {d} gives an edge probability outside [0, 1] (need 0 <= d <= {max})")]
    Density { d: f64, max: f64 },
    #[error("C({n}, {k}) does not fit in 64 bits")]
    TooManySubsets { n: usize, k: usize },
    #[error("operation defined for 3-uniform hypergraphs only, got k = {0}")]
    NotThreeUniform(usize),
    #[error("vertex {vertex} outside 0..{n}")]
    BadVertex { vertex: u32, n: usize },
}

/// Immutable k-uniform hypergraph with a vertex → edge incidence index.
///
/// Edges are stored flat, each as a strictly increasing k-tuple; edge `i`
/// occupies `edges[i*k..(i+1)*k]`.
#[derive(Clone, Debug)]
pub struct Hypergraph {
    n: usize,
    k: usize,
    edges: Vec<u32>,
    incidence: Vec<Vec<u32>>,
}

impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.k == other.k && self.edges == other.edges
    }
}

impl Eq for Hypergraph {}

impl Hypergraph {
    /// Builds a hypergraph from explicit edges, validating every invariant.
    pub fn new<E: AsRef<[u32]>>(n: usize, k: usize, edges: &[E]) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::Uniformity(k));
        }
        let mut flat = Vec::with_capacity(edges.len() * k);
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            let e = e.as_ref();
            if e.len() != k {
                return Err(HypergraphError::Arity { edge: i, expected: k, found: e.len() });
            }
            if let Some(&v) = e.iter().find(|&&v| v as usize >= n) {
                return Err(HypergraphError::VertexOutOfRange { edge: i, vertex: v, n });
            }
            if e.windows(2).any(|w| w[0] >= w[1]) {
                return Err(HypergraphError::Unsorted { edge: i });
            }
            if !seen.insert(e.to_vec()) {
                return Err(HypergraphError::Duplicate { edge: i });
            }
            flat.extend_from_slice(e);
        }
        Ok(Self::from_flat_unchecked(n, k, flat))
    }

    pub(crate) fn from_flat_unchecked(n: usize, k: usize, edges: Vec<u32>) -> Self {
        let mut incidence = vec![Vec::new(); n];
        for (i, e) in edges.chunks_exact(k).enumerate() {
            for &v in e {
                incidence[v as usize].push(i as u32);
            }
        }
        Hypergraph { n, k, edges, incidence }
    }

    /// Edgeless hypergraph.
    pub fn empty(n: usize, k: usize) -> Result<Self, HypergraphError> {
        Self::new::<Vec<u32>>(n, k, &[])
    }

    /// All `C(n, k)` edges.
    pub fn complete(n: usize, k: usize) -> Result<Self, HypergraphError> {
        if k < 2 {
            return Err(HypergraphError::Uniformity(k));
        }
        let total = binomial(n as u64, k as u64).ok_or(HypergraphError::TooManySubsets { n, k })?;
        let mut flat = Vec::with_capacity(total as usize * k);
        for r in 0..total {
            flat.extend(colex_unrank(r, k, n));
        }
        Ok(Self::from_flat_unchecked(n, k, flat))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.k
    }

    #[inline]
    pub fn edge(&self, e: usize) -> &[u32] {
        &self.edges[e * self.k..(e + 1) * self.k]
    }

    pub fn edges(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.edges.chunks_exact(self.k)
    }

    /// Indices of the edges containing `v`.
    #[inline]
    pub fn incident(&self, v: u32) -> &[u32] {
        &self.incidence[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.incidence[v as usize].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Recomputes the incidence index from the edge list and compares.
    pub fn incidence_consistent(&self) -> bool {
        let fresh = Self::from_flat_unchecked(self.n, self.k, self.edges.clone());
        fresh.incidence == self.incidence
    }

    pub(crate) fn require_three_uniform(&self) -> Result<(), HypergraphError> {
        if self.k == 3 {
            Ok(())
        } else {
            Err(HypergraphError::NotThreeUniform(self.k))
        }
    }

    pub(crate) fn vertex_set(&self, vertices: &[u32]) -> Result<VertexSet, HypergraphError> {
        let mut set = VertexSet::new(self.n);
        for &v in vertices {
            if v as usize >= self.n {
                return Err(HypergraphError::BadVertex { vertex: v, n: self.n });
            }
            set.insert(v);
        }
        Ok(set)
    }
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Hypergraph::new(5, 3, &[vec![0, 1]]),
            Err(HypergraphError::Arity { edge: 0, expected: 3, found: 2 })
        );
        assert_eq!(
            Hypergraph::new(5, 3, &[[0, 1, 5]]),
            Err(HypergraphError::VertexOutOfRange { edge: 0, vertex: 5, n: 5 })
        );
        assert_eq!(Hypergraph::new(5, 3, &[[0, 2, 1]]), Err(HypergraphError::Unsorted { edge: 0 }));
        assert_eq!(Hypergraph::new(5, 3, &[[0, 1, 1]]), Err(HypergraphError::Unsorted { edge: 0 }));
        assert_eq!(
            Hypergraph::new(5, 3, &[[0, 1, 2], [0, 1, 2]]),
            Err(HypergraphError::Duplicate { edge: 1 })
        );
        assert_eq!(Hypergraph::empty(5, 1), Err(HypergraphError::Uniformity(1)));
    }

    #[test]
    fn incidence_matches_edges() {
        let h = fixtures::h0();
        assert_eq!(h.incident(0), &[0, 1]);
        assert_eq!(h.incident(4), &[2]);
        assert_eq!(h.max_degree(), 2);
        assert!(h.incidence_consistent());
    }

    #[test]
    fn complete_has_all_subsets() {
        let h = Hypergraph::complete(6, 3).unwrap();
        assert_eq!(h.edge_count(), 20);
        assert!(h.edges().all(|e| e.windows(2).all(|w| w[0] < w[1])));
    }
}
