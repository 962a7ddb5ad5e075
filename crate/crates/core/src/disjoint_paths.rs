//! Menger-style vertex-disjoint path systems.
//!
//! All path systems here are computed with the split-vertex flow engine, so a
//! maximum system always comes with a separator of the same size.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::Deref;

use crate::flow::{SearchOrder, VertexFlow};
use crate::graph::{FiniteGraph, VertexId};
use crate::rays::Ray;
use crate::{Error, Result};

/// A repetition-free vertex sequence; consecutive vertices are adjacent in
/// the host it was built for.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(pub Vec<VertexId>);

impl Path {
    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    /// Vertices strictly between the endpoints.
    pub fn interior(&self) -> &[VertexId] {
        if self.0.len() <= 2 {
            &[]
        } else {
            &self.0[1..self.0.len() - 1]
        }
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }

    pub fn is_simple(&self) -> bool {
        let set: BTreeSet<_> = self.0.iter().collect();
        set.len() == self.0.len()
    }

    /// Non-empty, simple and walking along host edges.
    pub fn is_path_in(&self, host: &FiniteGraph) -> bool {
        !self.0.is_empty()
            && self.is_simple()
            && self.0.iter().all(|&v| host.contains(v))
            && self.0.windows(2).all(|w| host.has_edge(w[0], w[1]))
    }
}

impl Deref for Path {
    type Target = [VertexId];

    fn deref(&self) -> &[VertexId] {
        &self.0
    }
}

impl From<Vec<VertexId>> for Path {
    fn from(v: Vec<VertexId>) -> Self {
        Path(v)
    }
}

/// Paths from a source ray to a target ray.
///
/// Every path starts on the source, ends on the target and has no interior
/// vertex on either. Which rays those are is recorded by the owner of the
/// family (see [`crate::extract::RayAdjacency`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    pub paths: Vec<Path>,
    pub pairwise_disjoint: bool,
}

impl PathFamily {
    pub fn new(paths: Vec<Path>) -> Self {
        let pairwise_disjoint = pairwise_disjoint(&paths);
        PathFamily { paths, pairwise_disjoint }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Same paths, walked from the target ray to the source ray.
    pub fn reversed(&self) -> PathFamily {
        PathFamily { paths: self.paths.iter().map(Path::reversed).collect(), pairwise_disjoint: self.pairwise_disjoint }
    }

    /// Checks the family invariants against `host` and the two rays.
    pub fn check(&self, host: &FiniteGraph, src: &Ray, dst: &Ray) -> core::result::Result<(), String> {
        let on_src: BTreeSet<_> = src.vertices.iter().copied().collect();
        let on_dst: BTreeSet<_> = dst.vertices.iter().copied().collect();
        for (n, p) in self.paths.iter().enumerate() {
            if !p.is_path_in(host) {
                return Err(format!("path {n} is not a path of the host"));
            }
            if !on_src.contains(&p.first()) || !on_dst.contains(&p.last()) {
                return Err(format!("path {n} does not run from the source ray to the target ray"));
            }
            if p.interior().iter().any(|v| on_src.contains(v) || on_dst.contains(v)) {
                return Err(format!("path {n} has an interior vertex on one of its rays"));
            }
        }
        if self.pairwise_disjoint && !pairwise_disjoint(&self.paths) {
            return Err("family is flagged disjoint but two paths meet".into());
        }
        Ok(())
    }
}

pub fn pairwise_disjoint(paths: &[Path]) -> bool {
    let mut seen = BTreeSet::new();
    paths.iter().flat_map(|p| p.iter()).all(|&v| seen.insert(v))
}

/// Outcome of [`connecting_family`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySearch {
    Found(PathFamily),
    /// Fewer than the requested number of disjoint paths exist; `separator`
    /// is a vertex set of size `found` meeting every connecting path.
    Insufficient { found: usize, separator: BTreeSet<VertexId> },
}

fn check_terminals(a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>, forbidden: &BTreeSet<VertexId>) -> Result<()> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::domain("both terminal sets must be non-empty"));
    }
    if !a.is_disjoint(forbidden) || !b.is_disjoint(forbidden) {
        return Err(Error::domain("terminal sets must avoid the forbidden set"));
    }
    Ok(())
}

/// Cuts a flow path down to an A–B path: it meets `a` only in its first
/// vertex and `b` only in its last.
pub(crate) fn trim(path: &[VertexId], in_a: impl Fn(VertexId) -> bool, in_b: impl Fn(VertexId) -> bool) -> Path {
    let end = path.iter().position(|&v| in_b(v)).expect("flow paths end in the target set");
    let start = path[..=end].iter().rposition(|&v| in_a(v)).expect("flow paths start in the source set");
    Path(path[start..=end].to_vec())
}

struct Solved {
    paths: Vec<Path>,
    separator: Option<BTreeSet<VertexId>>,
}

fn solve(
    g: &FiniteGraph,
    a: &BTreeSet<VertexId>,
    b: &BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
    limit: Option<usize>,
) -> Solved {
    let sources: Vec<_> = a.iter().copied().collect();
    let mut flow = VertexFlow::new(g, &sources, |v| !forbidden.contains(&v), |v| b.contains(&v), SearchOrder::Breadth);
    flow.run(limit);
    let paths = flow.paths().iter().map(|p| trim(p, |v| a.contains(&v), |v| b.contains(&v))).collect();
    let separator = flow.is_maximum().then(|| flow.separator());
    Solved { paths, separator }
}

/// A maximum set of pairwise vertex-disjoint A–B paths avoiding `forbidden`.
///
/// Vertices of `A ∩ B` show up as single-vertex paths. Augmentation is
/// breadth-first with neighbours in id order, so the output is deterministic.
pub fn max_vertex_disjoint_paths(
    g: &FiniteGraph,
    a: &BTreeSet<VertexId>,
    b: &BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
) -> Result<Vec<Path>> {
    check_terminals(a, b, forbidden)?;
    Ok(solve(g, a, b, forbidden, None).paths)
}

/// A minimum A–B vertex separator in `g - forbidden`; its size equals the
/// number of paths returned by [`max_vertex_disjoint_paths`].
pub fn min_vertex_separator(
    g: &FiniteGraph,
    a: &BTreeSet<VertexId>,
    b: &BTreeSet<VertexId>,
    forbidden: &BTreeSet<VertexId>,
) -> Result<BTreeSet<VertexId>> {
    check_terminals(a, b, forbidden)?;
    Ok(solve(g, a, b, forbidden, None).separator.unwrap_or_default())
}

/// At least `t` disjoint `src`–`dst` paths, none with an interior vertex on
/// either ray. Returns every path of a maximum system when it is large enough.
pub fn connecting_family(
    g: &FiniteGraph,
    src: &Ray,
    dst: &Ray,
    t: usize,
    forbidden: &BTreeSet<VertexId>,
) -> Result<FamilySearch> {
    let a: BTreeSet<_> = src.vertices.iter().copied().collect();
    let b: BTreeSet<_> = dst.vertices.iter().copied().collect();
    if !a.is_disjoint(&b) {
        return Err(Error::domain("rays intersect"));
    }
    check_terminals(&a, &b, forbidden)?;
    let solved = solve(g, &a, &b, forbidden, None);
    if solved.paths.len() >= t {
        Ok(FamilySearch::Found(PathFamily::new(solved.paths)))
    } else {
        Ok(FamilySearch::Insufficient { found: solved.paths.len(), separator: solved.separator.unwrap_or_default() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ball, hex_prefix, HexPrefixSpec, LazyGraph};
    use alloc::vec;

    fn v(x: u64) -> VertexId {
        VertexId(x)
    }

    fn set(xs: &[u64]) -> BTreeSet<VertexId> {
        xs.iter().map(|&x| v(x)).collect()
    }

    fn complete(n: u64) -> FiniteGraph {
        FiniteGraph::from_edges((0..n).flat_map(|a| (a + 1..n).map(move |b| (v(a), v(b))))).unwrap()
    }


    #[test]
    fn complete_graph_systems() {
        let g = complete(4);
        // A–B paths are fully disjoint, so a single source vertex carries one path
        // and {a} itself is a separator.
        let paths = max_vertex_disjoint_paths(&g, &set(&[0]), &set(&[1]), &set(&[])).unwrap();
        assert_eq!(paths, vec![Path(vec![v(0), v(1)])]);
        assert_eq!(min_vertex_separator(&g, &set(&[0]), &set(&[1]), &set(&[])).unwrap().len(), 1);
        let a = set(&[0, 2]);
        let b = set(&[1, 3]);
        let paths = max_vertex_disjoint_paths(&g, &a, &b, &set(&[])).unwrap();
        assert_eq!(paths.len(), 2);
        assert_eq!(min_vertex_separator(&g, &a, &b, &set(&[])).unwrap().len(), 2);
    }

    #[test]
    fn cut_vertex() {
        let g = FiniteGraph::from_edges([(v(0), v(5)), (v(5), v(1))]).unwrap();
        let paths = max_vertex_disjoint_paths(&g, &set(&[0]), &set(&[1]), &set(&[])).unwrap();
        assert_eq!(paths, vec![Path(vec![v(0), v(5), v(1)])]);
        assert_eq!(min_vertex_separator(&g, &set(&[0]), &set(&[1]), &set(&[])).unwrap().len(), 1);
        assert_eq!(max_vertex_disjoint_paths(&g, &set(&[0]), &set(&[1]), &set(&[5])).unwrap(), vec![]);
    }

    #[test]
    fn shared_terminals_give_trivial_paths() {
        let g = complete(4);
        let paths = max_vertex_disjoint_paths(&g, &set(&[0, 1]), &set(&[1, 2]), &set(&[])).unwrap();
        assert_eq!(paths.len(), 2);
        assert!(paths.contains(&Path(vec![v(1)])));
    }

    #[test]
    fn disconnected_terminals() {
        let g = FiniteGraph::from_edges([(v(0), v(1)), (v(2), v(3))]).unwrap();
        assert!(max_vertex_disjoint_paths(&g, &set(&[0]), &set(&[3]), &set(&[])).unwrap().is_empty());
        assert!(min_vertex_separator(&g, &set(&[0]), &set(&[3]), &set(&[])).unwrap().is_empty());
    }

    #[test]
    fn empty_terminals_are_rejected() {
        let g = complete(3);
        assert!(max_vertex_disjoint_paths(&g, &set(&[]), &set(&[1]), &set(&[])).is_err());
        assert!(min_vertex_separator(&g, &set(&[0]), &set(&[1]), &set(&[1])).is_err());
    }

    fn column(spec: HexPrefixSpec, i: u32) -> Ray {
        Ray::new((0..spec.depth).map(|j| HexPrefixSpec::vertex_id((i, j))).collect())
    }

    #[test]
    fn hex_columns_connect_through_their_rungs() {
        let spec = HexPrefixSpec::new(2, 9).unwrap();
        let g = hex_prefix(spec);
        let fam = match connecting_family(&g, &column(spec, 0), &column(spec, 1), 3, &set(&[])).unwrap() {
            FamilySearch::Found(f) => f,
            other => panic!("{other:?}"),
        };
        let expected: Vec<Path> = [0, 2, 4, 6, 8]
            .iter()
            .map(|&j| Path(vec![HexPrefixSpec::vertex_id((0, j)), HexPrefixSpec::vertex_id((1, j))]))
            .collect();
        let mut got = fam.paths.clone();
        got.sort();
        let mut want = expected;
        want.sort();
        assert_eq!(got, want);
        fam.check(&g, &column(spec, 0), &column(spec, 1)).unwrap();
    }

    #[test]
    fn ladder_rails_have_one_rung_per_level() {
        let g = LazyGraph::Ladder;
        let host = ball(&g, g.origin(), 8).unwrap();
        let rail = |i| Ray::new((0..4).map(|j| g.vertex(i, j).unwrap()).collect());
        match connecting_family(&host, &rail(0), &rail(1), 3, &set(&[])).unwrap() {
            FamilySearch::Found(f) => assert_eq!(f.len(), 4),
            other => panic!("{other:?}"),
        }
        let short = |i| Ray::new((0..2).map(|j| g.vertex(i, j).unwrap()).collect());
        match connecting_family(&host, &short(0), &short(1), 3, &set(&[])).unwrap() {
            FamilySearch::Insufficient { found, separator } => {
                assert_eq!(found, 2);
                assert_eq!(separator.len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tree_rays_meet_only_at_the_root() {
        let g = LazyGraph::BinaryTree;
        let host = ball(&g, g.origin(), 4).unwrap();
        let left = Ray::new(vec![v(1), v(3), v(7), v(15)]);
        let right = Ray::new(vec![v(2), v(6), v(14), v(30)]);
        assert!(matches!(connecting_family(&host, &left, &right, 1, &set(&[])).unwrap(), FamilySearch::Found(_)));
        match connecting_family(&host, &left, &right, 1, &set(&[0])).unwrap() {
            FamilySearch::Insufficient { found: 0, separator } => assert!(separator.is_empty()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn intersecting_rays_are_a_domain_error() {
        let g = complete(4);
        let a = Ray::new(vec![v(0), v(1)]);
        let b = Ray::new(vec![v(1), v(2)]);
        assert!(connecting_family(&g, &a, &b, 1, &set(&[])).is_err());
    }
}
