//! Graph representations: lazy neighbour oracles for the built-in infinite
//! families, finite simple graphs, breadth-first truncations and the
//! hexagonal quarter-grid pattern.

mod finite;
mod hex;
mod lazy;
mod truncation;
mod vertex;

pub use self::finite::FiniteGraph;
pub use self::hex::{hex_prefix, hex_rung, HexPrefixSpec, PatternEdge, PatternVertex};
pub use self::lazy::{Family, LazyGraph};
pub use self::truncation::{ball, ball_with_limit, sphere, Truncation, DEFAULT_VERTEX_LIMIT};
pub use self::vertex::{pair, unpair, VertexId};

use alloc::vec::Vec;

/// Read access to a (possibly implicit) simple undirected graph.
pub trait Adjacency {
    fn contains(&self, v: VertexId) -> bool;

    /// Neighbours of `v` in ascending id order. Empty when `v` is absent.
    fn neighbors_of(&self, v: VertexId) -> Vec<VertexId>;
}
