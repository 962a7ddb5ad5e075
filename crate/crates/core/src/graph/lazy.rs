use alloc::vec;
use alloc::vec::Vec;

use super::hex::hex_rung;
use super::vertex::{pair, unpair, VertexId};
use super::{Adjacency, FiniteGraph};
use crate::{Error, Result};

/// Deepest binary-tree level whose children still have representable ids.
const TREE_MAX_DEPTH: u32 = 61;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    HexQuarterGrid,
    Grid2d,
    BinaryTree,
    Ladder,
    Finite,
}

impl Family {
    pub const fn name(self) -> &'static str {
        match self {
            Family::HexQuarterGrid => "hex",
            Family::Grid2d => "grid2d",
            Family::BinaryTree => "binary_tree",
            Family::Ladder => "ladder",
            Family::Finite => "file",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        match name {
            "hex" | "hex_quarter_grid" => Some(Family::HexQuarterGrid),
            "grid2d" | "grid" => Some(Family::Grid2d),
            "binary_tree" | "tree" => Some(Family::BinaryTree),
            "ladder" => Some(Family::Ladder),
            "file" | "finite" => Some(Family::Finite),
            _ => None,
        }
    }
}

/// A locally finite graph given by a deterministic neighbour oracle.
///
/// The built-in families are infinite and hard-coded; `Finite` wraps an
/// explicit graph (for example one loaded from an edge-list file).
///
/// | family | vertices | edges |
/// |--------|----------|-------|
/// | hex quarter grid | `(i, j)`, `i, j >= 0` | `(i,j)-(i,j+1)`; rung `(i,j)-(i+1,j)` iff `j >= i` and `j - i` even |
/// | grid2d | `(i, j)`, `i, j >= 0` | unit steps |
/// | binary tree | heap index (`(depth, pos)` -> `2^depth - 1 + pos`) | parent/child |
/// | ladder | `(i, j)`, `i in {0, 1}`, `j >= 0` | rails `(i,j)-(i,j+1)`, rungs `(0,j)-(1,j)` |
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LazyGraph {
    HexQuarterGrid,
    Grid2d,
    BinaryTree,
    Ladder,
    Finite(FiniteGraph),
}

impl LazyGraph {
    pub fn family(&self) -> Family {
        match self {
            LazyGraph::HexQuarterGrid => Family::HexQuarterGrid,
            LazyGraph::Grid2d => Family::Grid2d,
            LazyGraph::BinaryTree => Family::BinaryTree,
            LazyGraph::Ladder => Family::Ladder,
            LazyGraph::Finite(_) => Family::Finite,
        }
    }

    /// Canonical root: the coordinate origin, or the smallest id of a finite graph.
    pub fn origin(&self) -> VertexId {
        match self {
            LazyGraph::Finite(g) => g.vertices().next().unwrap_or(VertexId(0)),
            _ => VertexId(0),
        }
    }

    /// Coordinates of `v` for the built-in families.
    pub fn coords(&self, v: VertexId) -> Option<(u64, u64)> {
        if !self.contains(v) {
            return None;
        }
        match self {
            LazyGraph::HexQuarterGrid | LazyGraph::Grid2d | LazyGraph::Ladder => Some(unpair(v.0)),
            LazyGraph::BinaryTree => {
                let depth = tree_depth(v.0);
                Some((depth as u64, v.0 + 1 - (1u64 << depth)))
            }
            LazyGraph::Finite(_) => None,
        }
    }

    /// Inverse of [`coords`](Self::coords).
    pub fn vertex(&self, i: u64, j: u64) -> Option<VertexId> {
        let v = match self {
            LazyGraph::HexQuarterGrid | LazyGraph::Grid2d | LazyGraph::Ladder => VertexId(pair(i, j)?),
            LazyGraph::BinaryTree => {
                if i > TREE_MAX_DEPTH as u64 || j >= (1u64 << i) {
                    return None;
                }
                VertexId((1u64 << i) - 1 + j)
            }
            LazyGraph::Finite(_) => return None,
        };
        self.contains(v).then_some(v)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        match self {
            LazyGraph::HexQuarterGrid | LazyGraph::Grid2d => true,
            LazyGraph::Ladder => unpair(v.0).0 <= 1,
            LazyGraph::BinaryTree => tree_depth(v.0) <= TREE_MAX_DEPTH,
            LazyGraph::Finite(g) => g.contains(v),
        }
    }

    /// Sorted, duplicate-free neighbour list of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>> {
        if !self.contains(v) {
            return Err(Error::InvalidVertex { vertex: v, family: self.family().name() });
        }
        let mut out = match self {
            LazyGraph::HexQuarterGrid => {
                let (i, j) = unpair(v.0);
                let mut cells = vec![(i, j + 1)];
                if j > 0 {
                    cells.push((i, j - 1));
                }
                if hex_rung(i, j) {
                    cells.push((i + 1, j));
                }
                if i > 0 && hex_rung(i - 1, j) {
                    cells.push((i - 1, j));
                }
                encode_all(&cells)
            }
            LazyGraph::Grid2d => {
                let (i, j) = unpair(v.0);
                let mut cells = vec![(i + 1, j), (i, j + 1)];
                if i > 0 {
                    cells.push((i - 1, j));
                }
                if j > 0 {
                    cells.push((i, j - 1));
                }
                encode_all(&cells)
            }
            LazyGraph::Ladder => {
                let (i, j) = unpair(v.0);
                let mut cells = vec![(1 - i, j), (i, j + 1)];
                if j > 0 {
                    cells.push((i, j - 1));
                }
                encode_all(&cells)
            }
            LazyGraph::BinaryTree => {
                let x = v.0;
                let mut ids = Vec::with_capacity(3);
                if x > 0 {
                    ids.push(VertexId((x - 1) / 2));
                }
                if tree_depth(x) < TREE_MAX_DEPTH {
                    ids.push(VertexId(2 * x + 1));
                    ids.push(VertexId(2 * x + 2));
                }
                ids
            }
            LazyGraph::Finite(g) => g.neighbors(v).to_vec(),
        };
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// Closed-form graph distance, for the families that have one.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Option<u64> {
        if !self.contains(u) || !self.contains(v) {
            return None;
        }
        match self {
            // The quadrant and the ladder are L1-convex: a monotone staircase is a shortest path.
            LazyGraph::Grid2d | LazyGraph::Ladder => {
                let (a, b) = unpair(u.0);
                let (c, d) = unpair(v.0);
                Some(a.abs_diff(c) + b.abs_diff(d))
            }
            LazyGraph::BinaryTree => {
                let (mut x, mut y) = (u.0, v.0);
                let mut steps = 0;
                while x != y {
                    if x > y {
                        x = (x - 1) / 2;
                    } else {
                        y = (y - 1) / 2;
                    }
                    steps += 1;
                }
                Some(steps)
            }
            LazyGraph::HexQuarterGrid | LazyGraph::Finite(_) => None,
        }
    }

    /// Whether the graph is known to be a tree.
    pub fn is_tree(&self) -> bool {
        matches!(self, LazyGraph::BinaryTree)
    }
}

impl Adjacency for LazyGraph {
    fn contains(&self, v: VertexId) -> bool {
        LazyGraph::contains(self, v)
    }

    fn neighbors_of(&self, v: VertexId) -> Vec<VertexId> {
        self.neighbors(v).unwrap_or_default()
    }
}

fn encode_all(cells: &[(u64, u64)]) -> Vec<VertexId> {
    cells.iter().filter_map(|&(i, j)| pair(i, j).map(VertexId)).collect()
}

fn tree_depth(x: u64) -> u32 {
    match x.checked_add(1) {
        Some(y) => 63 - y.leading_zeros(),
        None => 64,
    }
}
