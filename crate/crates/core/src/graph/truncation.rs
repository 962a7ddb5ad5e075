use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use super::{Adjacency, FiniteGraph, LazyGraph, VertexId};
use crate::{Error, Result};

/// Largest truncation materialized by default.
pub const DEFAULT_VERTEX_LIMIT: usize = 1 << 21;

/// The ball of radius `radius` around `root`, viewed through the oracle.
///
/// Families with a closed-form metric are never materialized, so a
/// truncation of the binary tree at radius 32 costs nothing until it is
/// explored. Other families get a breadth-first distance table.
#[derive(Debug, Clone)]
pub struct Truncation<'a> {
    graph: &'a LazyGraph,
    root: VertexId,
    radius: u64,
    table: Option<BTreeMap<VertexId, u64>>,
}

impl<'a> Truncation<'a> {
    pub fn new(graph: &'a LazyGraph, root: VertexId, radius: u64, limit: usize) -> Result<Self> {
        if !graph.contains(root) {
            return Err(Error::InvalidVertex { vertex: root, family: graph.family().name() });
        }
        let table = match graph.distance(root, root) {
            Some(_) => None,
            None => Some(bfs_levels(graph, root, radius, limit)?),
        };
        Ok(Truncation { graph, root, radius, table })
    }

    pub fn graph(&self) -> &'a LazyGraph {
        self.graph
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn radius(&self) -> u64 {
        self.radius
    }

    /// Distance from the root, or `None` outside the ball.
    pub fn distance(&self, v: VertexId) -> Option<u64> {
        match &self.table {
            Some(t) => t.get(&v).copied(),
            None => self.graph.distance(self.root, v).filter(|&d| d <= self.radius),
        }
    }

    /// Vertices at exact distance `r <= radius`, ascending.
    pub fn sphere(&self, r: u64, limit: usize) -> Result<Vec<VertexId>> {
        if r > self.radius {
            return Ok(Vec::new());
        }
        let levels = match &self.table {
            Some(t) => return Ok(t.iter().filter(|&(_, &d)| d == r).map(|(&v, _)| v).collect()),
            None => bfs_levels(self.graph, self.root, r, limit)?,
        };
        Ok(levels.into_iter().filter(|&(_, d)| d == r).map(|(v, _)| v).collect())
    }

    /// Sizes of the spheres of radius `0..=max_r`, stopping early once a
    /// sphere reaches `stop_at` vertices.
    pub fn sphere_sizes(&self, max_r: u64, stop_at: usize, limit: usize) -> Result<Vec<usize>> {
        let max_r = max_r.min(self.radius);
        let mut sizes = Vec::new();
        let mut seen = BTreeSet::from([self.root]);
        let mut level = alloc::vec![self.root];
        loop {
            sizes.push(level.len());
            if sizes.len() as u64 > max_r || level.len() >= stop_at {
                return Ok(sizes);
            }
            let mut next = Vec::new();
            for &v in &level {
                for w in self.graph.neighbors_of(v) {
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
            if seen.len() > limit {
                return Err(Error::TruncationTooLarge { limit });
            }
            level = next;
        }
    }

    pub fn materialize(&self, limit: usize) -> Result<FiniteGraph> {
        let dist = match &self.table {
            Some(t) => t.clone(),
            None => bfs_levels(self.graph, self.root, self.radius, limit)?,
        };
        let mut g = FiniteGraph::new();
        for &v in dist.keys() {
            g.add_vertex(v);
            for w in self.graph.neighbors_of(v) {
                if dist.contains_key(&w) {
                    g.insert_edge(v, w);
                }
            }
        }
        Ok(g)
    }
}

impl Adjacency for Truncation<'_> {
    fn contains(&self, v: VertexId) -> bool {
        self.distance(v).is_some()
    }

    fn neighbors_of(&self, v: VertexId) -> Vec<VertexId> {
        if !Adjacency::contains(self, v) {
            return Vec::new();
        }
        let mut out = self.graph.neighbors_of(v);
        out.retain(|&w| self.distance(w).is_some());
        out
    }
}

fn bfs_levels(g: &LazyGraph, root: VertexId, radius: u64, limit: usize) -> Result<BTreeMap<VertexId, u64>> {
    let mut dist = BTreeMap::from([(root, 0)]);
    let mut queue = VecDeque::from([root]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        if d == radius {
            continue;
        }
        for w in g.neighbors(v)? {
            if !dist.contains_key(&w) {
                if dist.len() >= limit {
                    return Err(Error::TruncationTooLarge { limit });
                }
                dist.insert(w, d + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// Subgraph induced on the vertices within oracle distance `r` of `root`.
pub fn ball(g: &LazyGraph, root: VertexId, r: u64) -> Result<FiniteGraph> {
    ball_with_limit(g, root, r, DEFAULT_VERTEX_LIMIT)
}

pub fn ball_with_limit(g: &LazyGraph, root: VertexId, r: u64, limit: usize) -> Result<FiniteGraph> {
    Truncation::new(g, root, r, limit)?.materialize(limit)
}

/// Vertices at exact distance `r` from `root`.
pub fn sphere(g: &LazyGraph, root: VertexId, r: u64) -> Result<BTreeSet<VertexId>> {
    let t = Truncation::new(g, root, r, DEFAULT_VERTEX_LIMIT)?;
    Ok(t.sphere(r, DEFAULT_VERTEX_LIMIT)?.into_iter().collect())
}
