//! Finite-scale machinery for thick ends and hexagonal grid minors.
//!
//! The crate works on locally finite infinite graphs given as neighbour
//! oracles ([`LazyGraph`]) and on their finite truncations ([`FiniteGraph`]).
//! On top of that it provides
//!
//! * Menger-style vertex-disjoint path systems ([`disjoint_paths`]),
//! * frontier rays, finite end-equivalence and thick-end witnesses ([`rays`]),
//! * a finite star/comb extractor ([`star_comb`]),
//! * the grid extraction pipeline that turns a thick-end witness into a
//!   certified topological-minor embedding of a hexagonal quarter-grid prefix
//!   ([`extract`]),
//! * an independent certificate checker with a mutation fuzzer ([`verify`]).
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the command
//! line live in the `halin` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod error;
mod flow;

pub mod disjoint_paths;
pub mod extract;
pub mod graph;
pub mod rays;
pub mod star_comb;
pub mod verify;

pub use self::error::{Error, Result};
pub use self::graph::{
    ball, hex_prefix, sphere, Adjacency, Family, FiniteGraph, HexPrefixSpec, LazyGraph, PatternVertex, VertexId,
};
