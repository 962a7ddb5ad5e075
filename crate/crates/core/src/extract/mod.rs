//! Turning a thick-end witness into a certified grid prefix.

mod adjacency;
mod assemble;
mod comb;
mod lemma;
mod pipeline;
mod roundtrip;

use alloc::string::String;
use core::fmt;

pub use adjacency::{build_ray_adjacency, ray_adjacency_in, reroute_family, RayAdjacency};
pub use comb::comb_construct;
pub use lemma::{c_segments, lemma_construct, LemmaOutput, LemmaTrace};
pub use pipeline::{halin_pipeline, Case, ExtractionReport, PipelineParams};
pub use roundtrip::witness_from_embedding;

/// Where a construction ran out of material.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Witness,
    Adjacency,
    StarComb,
    /// The first family has no path at all.
    Base,
    /// No rung `(col, row)`–`(col + 1, row)` could be placed.
    Rung { col: usize, row: u32 },
    /// A column ray is too short.
    Column { col: usize },
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stage::Witness => f.write_str("witness"),
            Stage::Adjacency => f.write_str("adjacency"),
            Stage::StarComb => f.write_str("star_comb"),
            Stage::Base => f.write_str("base"),
            Stage::Rung { col, row } => write!(f, "rung column {col}->{} row {row}", col + 1),
            Stage::Column { col } => write!(f, "column {col}"),
        }
    }
}

/// Result of a construction that may run out of material.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Built<T> {
    Success(T),
    Insufficient { stage: Stage, diagnostic: String },
}

impl<T> Built<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Built<U> {
        match self {
            Built::Success(t) => Built::Success(f(t)),
            Built::Insufficient { stage, diagnostic } => Built::Insufficient { stage, diagnostic },
        }
    }

    pub fn success(self) -> Option<T> {
        match self {
            Built::Success(t) => Some(t),
            Built::Insufficient { .. } => None,
        }
    }
}
