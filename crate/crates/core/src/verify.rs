//! Certificate checking for embeddings of hexagonal grid prefixes.
//!
//! The checks walk raw vertex lists against the host adjacency and share no
//! code with the extraction routines they are meant to audit.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};

use crate::disjoint_paths::Path;
use crate::graph::{FiniteGraph, HexPrefixSpec, PatternEdge, PatternVertex, VertexId};

/// A claimed subdivision of `hex_prefix(pattern)` inside some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub pattern: HexPrefixSpec,
    pub branch: BTreeMap<PatternVertex, VertexId>,
    /// Keyed by edges with the smaller pattern vertex first; each path is
    /// listed from that vertex's image.
    pub edge_paths: BTreeMap<PatternEdge, Path>,
}

impl Embedding {
    /// Reorients every path to start at the image of the smaller pattern vertex.
    pub fn canonicalize(&mut self) {
        let branch = &self.branch;
        let old = core::mem::take(&mut self.edge_paths);
        for ((a, b), path) in old {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let path = if !path.is_empty() && branch.get(&a) != Some(&path.first()) && branch.get(&a) == Some(&path.last()) {
                path.reversed()
            } else {
                path
            };
            self.edge_paths.insert((a, b), path);
        }
    }

    /// Host vertices used by branch vertices or paths.
    pub fn host_vertices(&self) -> BTreeSet<VertexId> {
        let mut out: BTreeSet<VertexId> = self.branch.values().copied().collect();
        for p in self.edge_paths.values() {
            out.extend(p.iter().copied());
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    BranchNotInjective,
    /// A pattern vertex has no image, or its image is not a host vertex.
    BranchMissing,
    PathNotInHost,
    EndpointMismatch,
    PathsIntersect,
    InteriorHitsBranch,
    PatternEdgeMissing,
    /// The certificate names a vertex or edge the pattern does not have.
    NotInPattern,
}

impl ViolationKind {
    pub fn name(self) -> &'static str {
        match self {
            ViolationKind::BranchNotInjective => "branch_not_injective",
            ViolationKind::BranchMissing => "branch_missing",
            ViolationKind::PathNotInHost => "path_not_in_host",
            ViolationKind::EndpointMismatch => "endpoint_mismatch",
            ViolationKind::PathsIntersect => "paths_intersect",
            ViolationKind::InteriorHitsBranch => "interior_hits_branch",
            ViolationKind::PatternEdgeMissing => "pattern_edge_missing",
            ViolationKind::NotInPattern => "not_in_pattern",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Location {
    Vertex(PatternVertex),
    Edge(PatternEdge),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Vertex((i, j)) => write!(f, "({i},{j})"),
            Location::Edge(((i, j), (k, l))) => write!(f, "({i},{j})-({k},{l})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub location: Location,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.kind.name(), self.location)
    }
}

fn ordered(a: PatternVertex, b: PatternVertex) -> PatternEdge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All subdivision conditions, checked from scratch. An empty result means
/// the certificate is valid. Violations are sorted by location, then kind.
pub fn verify_embedding(host: &FiniteGraph, emb: &Embedding) -> Vec<Violation> {
    let mut found = BTreeSet::new();
    let mut flag = |location, kind| {
        found.insert(Violation { location, kind });
    };
    let pattern_vertices: BTreeSet<PatternVertex> = emb.pattern.vertices().collect();
    let pattern_edges: BTreeSet<PatternEdge> = emb.pattern.edges().into_iter().collect();

    let mut owners: BTreeMap<VertexId, Vec<PatternVertex>> = BTreeMap::new();
    for (&p, &h) in &emb.branch {
        if !pattern_vertices.contains(&p) {
            flag(Location::Vertex(p), ViolationKind::NotInPattern);
        }
        owners.entry(h).or_default().push(p);
    }
    for group in owners.values().filter(|g| g.len() > 1) {
        for &p in group {
            flag(Location::Vertex(p), ViolationKind::BranchNotInjective);
        }
    }
    for &p in &pattern_vertices {
        if emb.branch.get(&p).is_none_or(|&h| !host.contains(h)) {
            flag(Location::Vertex(p), ViolationKind::BranchMissing);
        }
    }

    let mut interior_owner: BTreeMap<VertexId, Vec<PatternEdge>> = BTreeMap::new();
    for (&(a, b), path) in &emb.edge_paths {
        let e = ordered(a, b);
        let here = Location::Edge(e);
        if !pattern_edges.contains(&e) {
            flag(here, ViolationKind::NotInPattern);
        }
        let vs: &[VertexId] = path;
        if vs.len() < 2 {
            flag(here, ViolationKind::EndpointMismatch);
            continue;
        }
        let (first, last) = (vs[0], vs[vs.len() - 1]);
        let (ia, ib) = (emb.branch.get(&e.0).copied(), emb.branch.get(&e.1).copied());
        let forward = Some(first) == ia && Some(last) == ib;
        let backward = Some(first) == ib && Some(last) == ia;
        if !(forward || backward) {
            flag(here, ViolationKind::EndpointMismatch);
        }
        let mut seen = BTreeSet::new();
        let mut walks = true;
        for (n, &x) in vs.iter().enumerate() {
            if !host.contains(x) || !seen.insert(x) {
                walks = false;
            }
            if n > 0 && !host.has_edge(vs[n - 1], x) {
                walks = false;
            }
        }
        if !walks {
            flag(here, ViolationKind::PathNotInHost);
        }
        for &x in &vs[1..vs.len() - 1] {
            if owners.contains_key(&x) {
                flag(here, ViolationKind::InteriorHitsBranch);
            }
            interior_owner.entry(x).or_default().push(e);
        }
    }
    for edges in interior_owner.values() {
        let distinct: BTreeSet<_> = edges.iter().collect();
        if distinct.len() > 1 {
            for &&e in &distinct {
                flag(Location::Edge(e), ViolationKind::PathsIntersect);
            }
        }
    }
    for &e in &pattern_edges {
        if !emb.edge_paths.keys().any(|&(a, b)| ordered(a, b) == e) {
            flag(Location::Edge(e), ViolationKind::PatternEdgeMissing);
        }
    }
    found.into_iter().collect()
}

/// One deterministic fault, chosen by `seed`, from: dropping a path vertex,
/// swapping two non-adjacent branch images, splicing a vertex of another
/// path into a path, and deleting an edge path.
///
/// On a valid embedding in a triangle-free host every mutation is detectable.
pub fn mutate_embedding(emb: &Embedding, seed: u64) -> Embedding {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = emb.clone();
    let edges: Vec<PatternEdge> = out.edge_paths.keys().copied().collect();
    if edges.is_empty() {
        if let Some(&p) = out.branch.keys().next() {
            out.branch.remove(&p);
        }
        return out;
    }
    let pick = |rng: &mut ChaCha8Rng| edges[rng.random_range(0..edges.len())];
    match rng.random_range(0..4u8) {
        0 => {
            let path = out.edge_paths.get_mut(&pick(&mut rng)).unwrap();
            if path.len() > 2 {
                let n = rng.random_range(1..path.len() - 1);
                path.0.remove(n);
            } else {
                path.0.pop();
            }
        }
        1 => {
            let vs: Vec<PatternVertex> = out.branch.keys().copied().collect();
            let a = vs[rng.random_range(0..vs.len())];
            let far: Vec<PatternVertex> = vs.iter().copied().filter(|&b| b != a && !emb.pattern.is_edge(a, b)).collect();
            if far.is_empty() {
                out.edge_paths.remove(&pick(&mut rng));
            } else {
                let b = far[rng.random_range(0..far.len())];
                let (x, y) = (out.branch[&a], out.branch[&b]);
                out.branch.insert(a, y);
                out.branch.insert(b, x);
            }
        }
        2 if edges.len() > 1 => {
            let e = pick(&mut rng);
            let others: Vec<VertexId> = out
                .edge_paths
                .iter()
                .filter(|(&f, _)| f != e)
                .flat_map(|(_, p)| p.iter().copied())
                .collect();
            let w = others[rng.random_range(0..others.len())];
            out.edge_paths.get_mut(&e).unwrap().0.insert(1, w);
        }
        _ => {
            out.edge_paths.remove(&pick(&mut rng));
        }
    }
    out
}
