use alloc::vec::Vec;

use super::vertex::pair;
use super::{FiniteGraph, VertexId};
use crate::{Error, Result};

/// Pattern vertex `(column, row)`.
pub type PatternVertex = (u32, u32);

/// Pattern edge, endpoints in lexicographic order.
pub type PatternEdge = (PatternVertex, PatternVertex);

/// Rung rule of the hexagonal quarter grid: `(i, j)` is joined to `(i + 1, j)`
/// iff `j >= i` and `j - i` is even.
///
/// The rung to the left of `(i, j)` needs `j - i` odd, so every vertex carries
/// at most one rung and the maximum degree is 3.
pub const fn hex_rung(i: u64, j: u64) -> bool {
    j >= i && (j - i).is_multiple_of(2)
}

/// Finite prefix of the hexagonal quarter grid: `cols` columns of `depth` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HexPrefixSpec {
    pub cols: u32,
    pub depth: u32,
}

impl HexPrefixSpec {
    pub fn new(cols: u32, depth: u32) -> Result<Self> {
        if cols == 0 || depth == 0 {
            return Err(Error::domain("hex prefix needs cols >= 1 and depth >= 1"));
        }
        Ok(HexPrefixSpec { cols, depth })
    }

    pub fn contains(&self, (i, j): PatternVertex) -> bool {
        i < self.cols && j < self.depth
    }

    /// Whether `(i, j)` has a rung to column `i + 1` inside the prefix.
    pub fn has_right_rung(&self, (i, j): PatternVertex) -> bool {
        i + 1 < self.cols && j < self.depth && hex_rung(i as u64, j as u64)
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = PatternVertex> + '_ {
        (0..self.cols).flat_map(move |i| (0..self.depth).map(move |j| (i, j)))
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<PatternEdge> {
        let mut out = Vec::new();
        for (i, j) in self.vertices() {
            if j + 1 < self.depth {
                out.push(((i, j), (i, j + 1)));
            }
            if self.has_right_rung((i, j)) {
                out.push(((i, j), (i + 1, j)));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_edge(&self, a: PatternVertex, b: PatternVertex) -> bool {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        (a.0 == b.0 && a.1 + 1 == b.1) || (a.1 == b.1 && a.0 + 1 == b.0 && self.has_right_rung(a))
    }

    /// Host-independent id of a pattern vertex (Cantor pairing of its coordinates).
    pub fn vertex_id((i, j): PatternVertex) -> VertexId {
        VertexId(pair(i as u64, j as u64).expect("u32 coordinates always pair"))
    }
}

/// The pattern graph itself, with vertex ids from [`HexPrefixSpec::vertex_id`].
pub fn hex_prefix(spec: HexPrefixSpec) -> FiniteGraph {
    let mut g = FiniteGraph::new();
    for v in spec.vertices() {
        g.add_vertex(HexPrefixSpec::vertex_id(v));
    }
    for (a, b) in spec.edges() {
        g.insert_edge(HexPrefixSpec::vertex_id(a), HexPrefixSpec::vertex_id(b));
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ball, LazyGraph};
    use alloc::collections::BTreeSet;

    #[test]
    fn single_column_is_a_path() {
        let g = hex_prefix(HexPrefixSpec::new(1, 5).unwrap());
        assert_eq!((g.num_vertices(), g.num_edges()), (5, 4));
        assert!(g.is_connected());
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn two_by_three() {
        let spec = HexPrefixSpec::new(2, 3).unwrap();
        let g = hex_prefix(spec);
        assert_eq!((g.num_vertices(), g.num_edges()), (6, 6));
        let rungs: Vec<_> = spec.edges().into_iter().filter(|(a, b)| a.0 != b.0).collect();
        assert_eq!(rungs, vec![((0, 0), (1, 0)), ((0, 2), (1, 2))]);
    }

    #[test]
    fn invalid_spec() {
        assert!(HexPrefixSpec::new(0, 3).is_err());
        assert!(HexPrefixSpec::new(3, 0).is_err());
    }

    #[test]
    fn max_degree_three_up_to_64() {
        for cols in 1..=64 {
            for depth in 1..=64 {
                let g = hex_prefix(HexPrefixSpec { cols, depth });
                assert!(g.max_degree() <= 3, "({cols}, {depth})");
            }
        }
    }

    #[test]
    fn prefix_matches_the_lazy_family() {
        let lazy = LazyGraph::HexQuarterGrid;
        let big = ball(&lazy, lazy.origin(), 48).unwrap();
        for (cols, depth) in [(1, 1), (2, 3), (3, 8), (4, 16), (6, 10)] {
            let spec = HexPrefixSpec { cols, depth };
            let keep: BTreeSet<_> = spec.vertices().map(HexPrefixSpec::vertex_id).collect();
            assert_eq!(big.induced(&keep), hex_prefix(spec), "({cols}, {depth})");
        }
    }
}
