//! Finite stars and combs in a connected graph with a marked vertex set.
//!
//! Both shapes are read off a breadth-first spanning tree rooted at the
//! lowest-id marked vertex, so every spoke, spine and attachment is a tree
//! path and therefore a path of the input graph.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::disjoint_paths::Path;
use crate::graph::{FiniteGraph, VertexId};
use crate::{Error, Result};

/// A subdivided star whose leaves lie in `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Star {
    pub center: VertexId,
    pub leaves: Vec<VertexId>,
    /// `spokes[i]` runs from the center to `leaves[i]`; a single-vertex spoke
    /// means the center itself is a leaf.
    pub spokes: Vec<Path>,
}

impl Star {
    pub fn uses_center_as_leaf(&self) -> bool {
        self.spokes.iter().any(|s| s.len() == 1)
    }
}

/// A spine path with disjoint attachment paths to teeth in `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comb {
    pub spine: Path,
    pub teeth: Vec<VertexId>,
    /// `attachments[i]` runs from a spine vertex to `teeth[i]`.
    pub attachments: Vec<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarOrComb {
    Star(Star),
    Comb(Comb),
    Exhausted,
}

/// A defect found by [`verify_star`] or [`verify_comb`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeViolation {
    CountMismatch,
    NotAPath { index: Option<usize> },
    WrongEndpoint { index: usize },
    NotInU { vertex: VertexId },
    SpokesIntersect { first: usize, second: usize },
    AttachmentsIntersect { first: usize, second: usize },
    AttachmentMeetsSpine { index: usize },
}

impl fmt::Display for ShapeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeViolation::CountMismatch => write!(f, "leaf and path counts differ"),
            ShapeViolation::NotAPath { index: None } => write!(f, "spine is not a path of the graph"),
            ShapeViolation::NotAPath { index: Some(i) } => write!(f, "path {i} is not a path of the graph"),
            ShapeViolation::WrongEndpoint { index } => write!(f, "path {index} has the wrong endpoints"),
            ShapeViolation::NotInU { vertex } => write!(f, "{vertex} is not a marked vertex"),
            ShapeViolation::SpokesIntersect { first, second } => write!(f, "spokes intersect: {first} and {second}"),
            ShapeViolation::AttachmentsIntersect { first, second } => {
                write!(f, "attachments intersect: {first} and {second}")
            }
            ShapeViolation::AttachmentMeetsSpine { index } => write!(f, "attachment {index} meets the spine twice"),
        }
    }
}

pub fn verify_star(g: &FiniteGraph, u: &BTreeSet<VertexId>, star: &Star) -> Vec<ShapeViolation> {
    let mut out = Vec::new();
    if star.leaves.len() != star.spokes.len() {
        out.push(ShapeViolation::CountMismatch);
    }
    for (i, (spoke, &leaf)) in star.spokes.iter().zip(&star.leaves).enumerate() {
        if !spoke.is_path_in(g) {
            out.push(ShapeViolation::NotAPath { index: Some(i) });
            continue;
        }
        if spoke.first() != star.center || spoke.last() != leaf {
            out.push(ShapeViolation::WrongEndpoint { index: i });
        }
        if !u.contains(&leaf) {
            out.push(ShapeViolation::NotInU { vertex: leaf });
        }
    }
    for i in 0..star.spokes.len() {
        for j in i + 1..star.spokes.len() {
            let a: BTreeSet<_> = star.spokes[i].iter().filter(|&&x| x != star.center).collect();
            if star.spokes[j].iter().any(|x| *x != star.center && a.contains(x)) || star.leaves[i] == star.leaves[j] {
                out.push(ShapeViolation::SpokesIntersect { first: i, second: j });
            }
        }
    }
    out
}

pub fn verify_comb(g: &FiniteGraph, u: &BTreeSet<VertexId>, comb: &Comb) -> Vec<ShapeViolation> {
    let mut out = Vec::new();
    if comb.teeth.len() != comb.attachments.len() {
        out.push(ShapeViolation::CountMismatch);
    }
    if !comb.spine.is_path_in(g) {
        out.push(ShapeViolation::NotAPath { index: None });
    }
    let spine: BTreeSet<_> = comb.spine.iter().copied().collect();
    for (i, (att, &tooth)) in comb.attachments.iter().zip(&comb.teeth).enumerate() {
        if !att.is_path_in(g) {
            out.push(ShapeViolation::NotAPath { index: Some(i) });
            continue;
        }
        if !spine.contains(&att.first()) || att.last() != tooth {
            out.push(ShapeViolation::WrongEndpoint { index: i });
        }
        if att[1..].iter().any(|x| spine.contains(x)) {
            out.push(ShapeViolation::AttachmentMeetsSpine { index: i });
        }
        if !u.contains(&tooth) {
            out.push(ShapeViolation::NotInU { vertex: tooth });
        }
    }
    for i in 0..comb.attachments.len() {
        let a: BTreeSet<_> = comb.attachments[i].iter().collect();
        for j in i + 1..comb.attachments.len() {
            if comb.attachments[j].iter().any(|x| a.contains(x)) {
                out.push(ShapeViolation::AttachmentsIntersect { first: i, second: j });
            }
        }
    }
    out
}

/// Breadth-first spanning tree over dense indices.
struct Tree {
    ids: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    marked: Vec<bool>,
    /// Marked vertices in the subtree below each vertex.
    below: Vec<usize>,
    total: usize,
}

impl Tree {
    fn new(g: &FiniteGraph, u: &BTreeSet<VertexId>, root: VertexId) -> Self {
        let ids: Vec<VertexId> = g.vertices().collect();
        let index = |v: VertexId| ids.binary_search(&v).expect("vertex of g");
        let n = ids.len();
        let mut adj = vec![Vec::new(); n];
        let mut parent = vec![None; n];
        let mut depth = vec![0; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let r = index(root);
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &w in g.neighbors(ids[x]) {
                let y = index(w);
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    depth[y] = depth[x] + 1;
                    adj[x].push(y);
                    adj[y].push(x);
                    queue.push_back(y);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let marked: Vec<bool> = ids.iter().map(|v| u.contains(v)).collect();
        let mut below: Vec<usize> = marked.iter().map(|&m| m as usize).collect();
        for &x in order.iter().rev() {
            if let Some(p) = parent[x] {
                below[p] += below[x];
            }
        }
        let total = below[r];
        Tree { ids, adj, parent, depth, marked, below, total }
    }

    /// Whether the component of `T - {x}` containing its neighbour `y` has a marked vertex.
    fn side_marked(&self, x: usize, y: usize) -> bool {
        if self.parent[y] == Some(x) {
            self.below[y] > 0
        } else {
            self.total - self.below[x] > 0
        }
    }

    /// Tree path from `x` through its neighbour `y` to the nearest marked
    /// vertex on that side (lowest index among the nearest).
    fn path_to_mark(&self, x: usize, y: usize) -> Vec<usize> {
        let mut from = vec![usize::MAX; self.ids.len()];
        from[y] = x;
        let mut level = vec![y];
        loop {
            if let Some(&hit) = level.iter().filter(|&&z| self.marked[z]).min() {
                let mut path = vec![hit];
                while *path.last().unwrap() != x {
                    path.push(from[*path.last().unwrap()]);
                }
                path.reverse();
                return path;
            }
            let mut next = Vec::new();
            for &z in &level {
                for &w in &self.adj[z] {
                    if from[w] == usize::MAX && w != x {
                        from[w] = z;
                        next.push(w);
                    }
                }
            }
            assert!(!next.is_empty(), "side_marked promised a mark");
            level = next;
        }
    }

    fn path_between(&self, mut a: usize, mut b: usize) -> Vec<usize> {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        while self.depth[a] > self.depth[b] {
            left.push(a);
            a = self.parent[a].unwrap();
        }
        while self.depth[b] > self.depth[a] {
            right.push(b);
            b = self.parent[b].unwrap();
        }
        while a != b {
            left.push(a);
            right.push(b);
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
        }
        left.push(a);
        left.extend(right.into_iter().rev());
        left
    }

    fn to_path(&self, xs: &[usize]) -> Path {
        Path(xs.iter().map(|&x| self.ids[x]).collect())
    }

    /// Star at `x` with `k` leaves; the center counts as a leaf only if
    /// `allow_center` is set and the branches alone are too few.
    fn star_at(&self, x: usize, k: usize, allow_center: bool) -> Option<Star> {
        let branches: Vec<usize> = self.adj[x].iter().copied().filter(|&y| self.side_marked(x, y)).collect();
        let use_center = branches.len() < k;
        if use_center && !(allow_center && self.marked[x] && branches.len() + 1 >= k) {
            return None;
        }
        let mut spokes = Vec::with_capacity(k);
        if use_center {
            spokes.push(vec![x]);
        }
        spokes.extend(branches.iter().take(k - spokes.len()).map(|&y| self.path_to_mark(x, y)));
        Some(Star {
            center: self.ids[x],
            leaves: spokes.iter().map(|s| self.ids[*s.last().unwrap()]).collect(),
            spokes: spokes.iter().map(|s| self.to_path(s)).collect(),
        })
    }

    /// Teeth available along `spine`: one per spine vertex that is marked or
    /// has a marked branch. Returns (tooth count, marked spine vertices).
    fn score(&self, spine: &[usize]) -> (usize, usize) {
        let mut teeth = 0;
        let mut on_spine = 0;
        for (n, &s) in spine.iter().enumerate() {
            if self.marked[s] {
                teeth += 1;
                on_spine += 1;
            } else if self.off_spine_branches(spine, n).next().is_some() {
                teeth += 1;
            }
        }
        (teeth, on_spine)
    }

    fn off_spine_branches<'a>(&'a self, spine: &'a [usize], n: usize) -> impl Iterator<Item = usize> + 'a {
        let s = spine[n];
        let prev = n.checked_sub(1).map(|m| spine[m]);
        let next = spine.get(n + 1).copied();
        self.adj[s]
            .iter()
            .copied()
            .filter(move |&y| Some(y) != prev && Some(y) != next && self.side_marked(s, y))
    }

    fn comb(&self, k: usize) -> Option<Comb> {
        let n = self.ids.len();
        let mut best: Option<((usize, usize), Vec<usize>)> = None;
        for a in 0..n {
            for b in a..n {
                let spine = self.path_between(a, b);
                let score = self.score(&spine);
                if best.as_ref().is_none_or(|(s, _)| score > *s) {
                    best = Some((score, spine));
                }
            }
        }
        let ((teeth, _), spine) = best?;
        if teeth < k {
            return None;
        }
        let mut attachments = Vec::with_capacity(k);
        for (n, &s) in spine.iter().enumerate() {
            if attachments.len() == k {
                break;
            }
            if self.marked[s] {
                attachments.push(vec![s]);
            } else if let Some(y) = self.off_spine_branches(&spine, n).next() {
                attachments.push(self.path_to_mark(s, y));
            }
        }
        Some(Comb {
            spine: self.to_path(&spine),
            teeth: attachments.iter().map(|p| self.ids[*p.last().unwrap()]).collect(),
            attachments: attachments.iter().map(|p| self.to_path(p)).collect(),
        })
    }
}

/// Finds a star or a comb with `k` leaves or teeth in `U`.
///
/// Order of preference: a star whose leaves all differ from its center, then
/// a comb, then a star that uses its center as one leaf. On trees the search
/// is exhaustive; on other graphs it only sees the spanning tree, so
/// `Exhausted` means nothing was found there.
pub fn star_or_comb(g: &FiniteGraph, u: &BTreeSet<VertexId>, k: usize) -> Result<StarOrComb> {
    if k == 0 {
        return Err(Error::domain("k must be positive"));
    }
    if !g.is_connected() {
        return Err(Error::domain("graph is not connected"));
    }
    if let Some(&v) = u.iter().find(|v| !g.contains(**v)) {
        return Err(Error::domain(alloc::format!("marked vertex {v} is not in the graph")));
    }
    let Some(&root) = u.first() else {
        return Ok(StarOrComb::Exhausted);
    };
    let tree = Tree::new(g, u, root);
    let n = tree.ids.len();
    if let Some(star) = (0..n).find_map(|x| tree.star_at(x, k, false)) {
        return Ok(StarOrComb::Star(star));
    }
    if let Some(comb) = tree.comb(k) {
        return Ok(StarOrComb::Comb(comb));
    }
    Ok((0..n).find_map(|x| tree.star_at(x, k, true)).map_or(StarOrComb::Exhausted, StarOrComb::Star))
}
