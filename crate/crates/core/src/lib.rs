pub mod analysis;
pub mod bitset;
pub mod experiment;
pub mod game;
pub mod hypergraph;
pub mod rng;
pub mod scalar;
pub mod solver;
pub mod strategy;

pub use hypergraph::{Hypergraph, HypergraphError, ShadowGraph};
