use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::vec::Vec;

use super::{Adjacency, VertexId};
use crate::{Error, Result};

/// Finite simple undirected graph with sorted adjacency lists.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FiniteGraph {
    adj: BTreeMap<VertexId, Vec<VertexId>>,
}

impl FiniteGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list. Loops and repeated edges are rejected;
    /// the error names the offending edge's position in the input (1-based).
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = FiniteGraph::new();
        for (pos, (u, v)) in edges.into_iter().enumerate() {
            if u == v {
                return Err(Error::domain(format!("edge {}: loop at vertex {u}", pos + 1)));
            }
            if g.has_edge(u, v) {
                return Err(Error::domain(format!("edge {}: duplicate edge {u} {v}", pos + 1)));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: VertexId) {
        self.adj.entry(v).or_default();
    }

    /// Inserts `{u, v}`; returns false when it was already present or is a loop.
    pub fn insert_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        if u == v || self.has_edge(u, v) {
            return false;
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = self.adj.entry(a).or_default();
            let at = list.binary_search(&b).unwrap_err();
            list.insert(at, b);
        }
        true
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.adj.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(Vec::len).max().unwrap_or(0)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.adj
            .iter()
            .flat_map(|(&u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect()
    }

    pub fn induced(&self, keep: &BTreeSet<VertexId>) -> FiniteGraph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, l)| (v, l.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        FiniteGraph { adj }
    }

    /// Whether `self` is the subgraph of `other` induced on its own vertex set.
    pub fn is_induced_subgraph_of(&self, other: &FiniteGraph) -> bool {
        let keep: BTreeSet<_> = self.vertices().collect();
        keep.iter().all(|&v| other.contains(v)) && other.induced(&keep) == *self
    }

    /// Breadth-first distances from `root`, restricted to vertices accepted by `allow`.
    pub fn distances_where(&self, root: VertexId, allow: impl Fn(VertexId) -> bool) -> BTreeMap<VertexId, u64> {
        let mut dist = BTreeMap::new();
        if !self.contains(root) || !allow(root) {
            return dist;
        }
        dist.insert(root, 0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for &w in self.neighbors(v) {
                if allow(w) && !dist.contains_key(&w) {
                    dist.insert(w, d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self, root: VertexId) -> BTreeMap<VertexId, u64> {
        self.distances_where(root, |_| true)
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(v) => self.distances(v).len() == self.num_vertices(),
        }
    }
}

impl Adjacency for FiniteGraph {
    fn contains(&self, v: VertexId) -> bool {
        FiniteGraph::contains(self, v)
    }

    fn neighbors_of(&self, v: VertexId) -> Vec<VertexId> {
        self.neighbors(v).to_vec()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: u64) -> VertexId {
        VertexId(x)
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(FiniteGraph::from_edges([(v(3), v(3))]).is_err());
        assert!(FiniteGraph::from_edges([(v(1), v(2)), (v(2), v(1))]).is_err());
    }

    #[test]
    fn sorted_adjacency_and_edges() {
        let g = FiniteGraph::from_edges([(v(2), v(0)), (v(0), v(1)), (v(1), v(2)), (v(5), v(1))]).unwrap();
        assert_eq!(g.neighbors(v(1)), &[v(0), v(2), v(5)]);
        assert_eq!(g.edges(), vec![(v(0), v(1)), (v(0), v(2)), (v(1), v(2)), (v(1), v(5))]);
        assert_eq!(g.num_edges(), 4);
        assert_eq!(g.max_degree(), 3);
        assert!(g.is_connected());
    }
}
