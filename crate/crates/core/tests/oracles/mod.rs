//! Brute-force reference implementations shared by the property tests and
//! the acceptance suite. Everything here is exponential and meant for tiny
//! graphs only.
#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use halin_core::{FiniteGraph, VertexId};
use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};

pub fn v(x: u64) -> VertexId {
    VertexId(x)
}

/// Erdős–Rényi style graph on `0..n` with every vertex present.
pub fn random_graph(rng: &mut ChaCha8Rng, n: u64, p: f64) -> FiniteGraph {
    let mut g = FiniteGraph::new();
    for a in 0..n {
        g.add_vertex(v(a));
    }
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                g.insert_edge(v(a), v(b));
            }
        }
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether some vertex of `a` reaches some vertex of `b` in `g - removed`.
pub fn connected_avoiding(g: &FiniteGraph, a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>, removed: &BTreeSet<VertexId>) -> bool {
    let mut seen: BTreeSet<VertexId> = a.iter().copied().filter(|x| !removed.contains(x)).collect();
    let mut queue: VecDeque<VertexId> = seen.iter().copied().collect();
    while let Some(x) = queue.pop_front() {
        if b.contains(&x) {
            return true;
        }
        for &y in g.neighbors(x) {
            if !removed.contains(&y) && seen.insert(y) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// Smallest set `S` such that `g - forbidden - S` has no A–B path, found by
/// enumerating subsets in order of size.
pub fn brute_force_separator_size(g: &FiniteGraph, a: &BTreeSet<VertexId>, b: &BTreeSet<VertexId>, forbidden: &BTreeSet<VertexId>) -> usize {
    let candidates: Vec<VertexId> = g.vertices().filter(|x| !forbidden.contains(x)).collect();
    let n = candidates.len();
    let mut best = n;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut removed = forbidden.clone();
        removed.extend((0..n).filter(|i| mask >> i & 1 == 1).map(|i| candidates[i]));
        if !connected_avoiding(g, a, b, &removed) {
            best = size;
        }
    }
    best
}

/// Random non-empty subset of `0..n`.
pub fn random_subset(rng: &mut ChaCha8Rng, n: u64, p: f64) -> BTreeSet<VertexId> {
    let mut s: BTreeSet<VertexId> = (0..n).filter(|_| rng.random_bool(p)).map(v).collect();
    if s.is_empty() {
        s.insert(v(rng.random_range(0..n)));
    }
    s
}

/// Random tree on `0..n`: vertex `i` hangs off a uniformly chosen earlier vertex.
pub fn random_tree(rng: &mut ChaCha8Rng, n: u64) -> FiniteGraph {
    let mut g = FiniteGraph::new();
    g.add_vertex(v(0));
    for i in 1..n {
        let p = rng.random_range(0..i);
        g.insert_edge(v(p), v(i));
    }
    g
}

/// Random connected graph: a random tree plus extra random edges.
pub fn random_connected(rng: &mut ChaCha8Rng, n: u64, extra: f64) -> FiniteGraph {
    let mut g = random_tree(rng, n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(extra) {
                g.insert_edge(v(a), v(b));
            }
        }
    }
    g
}

/// The unique path from `a` to `b` in a tree.
pub fn tree_path(t: &FiniteGraph, a: VertexId, b: VertexId) -> Vec<VertexId> {
    let mut from = std::collections::BTreeMap::from([(a, a)]);
    let mut queue = VecDeque::from([a]);
    while let Some(x) = queue.pop_front() {
        for &y in t.neighbors(x) {
            if let std::collections::btree_map::Entry::Vacant(e) = from.entry(y) {
                e.insert(x);
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![b];
    while *path.last().unwrap() != a {
        path.push(from[path.last().unwrap()]);
    }
    path.reverse();
    path
}

fn subsets<T: Copy>(items: &[T], k: usize, out: &mut Vec<Vec<T>>, cur: &mut Vec<T>, start: usize) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..items.len() {
        cur.push(items[i]);
        subsets(items, k, out, cur, i + 1);
        cur.pop();
    }
}

pub fn k_subsets<T: Copy>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    subsets(items, k, &mut out, &mut Vec::new(), 0);
    out
}

/// Whether a tree has a star with `k` leaves in `u`: some center and `k`
/// marked leaves whose tree paths from the center share only the center.
pub fn tree_has_star(t: &FiniteGraph, u: &BTreeSet<VertexId>, k: usize) -> bool {
    let marked: Vec<VertexId> = u.iter().copied().collect();
    let choices = k_subsets(&marked, k);
    t.vertices().any(|c| {
        choices.iter().any(|leaves| {
            let mut used = BTreeSet::new();
            leaves.iter().all(|&l| tree_path(t, c, l).into_iter().skip(1).all(|x| used.insert(x)))
        })
    })
}

/// Whether a tree has a comb with `k` teeth in `u`: a spine path and `k`
/// marked teeth whose paths to the spine are disjoint.
pub fn tree_has_comb(t: &FiniteGraph, u: &BTreeSet<VertexId>, k: usize) -> bool {
    let marked: Vec<VertexId> = u.iter().copied().collect();
    let choices = k_subsets(&marked, k);
    let vs: Vec<VertexId> = t.vertices().collect();
    vs.iter().any(|&a| {
        vs.iter().any(|&b| {
            let spine: BTreeSet<VertexId> = tree_path(t, a, b).into_iter().collect();
            choices.iter().any(|teeth| {
                let mut used = BTreeSet::new();
                teeth.iter().all(|&tooth| {
                    // path from the tooth up to the first spine vertex
                    let nearest = *spine.iter().min_by_key(|&&s| tree_path(t, tooth, s).len()).unwrap();
                    tree_path(t, tooth, nearest).into_iter().all(|x| used.insert(x))
                })
            })
        })
    })
}
