//! Unit vertex-capacity max-flow on a lazily expanded split network.
//!
//! Every graph vertex `v` becomes `in(v) -> out(v)` with capacity 1; graph
//! edges and the terminal arcs are uncapacitated, so a minimum cut consists of
//! vertex arcs only and reads off directly as a vertex separator. Nodes are
//! created the first time a search reaches them, which lets the same engine
//! run on an explicit graph or on a truncation of an infinite oracle.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Adjacency, VertexId};

const SOURCE: usize = 0;
const SINK: usize = 1;
const UNBOUNDED: u32 = u32::MAX / 2;

/// How augmenting paths are searched for.
#[derive(Clone, Copy)]
pub(crate) enum SearchOrder<'r> {
    /// Breadth-first, neighbours in ascending id order: shortest augmenting
    /// path, lowest ids first.
    Breadth,
    /// Depth-first, preferring neighbours of larger rank (then lower id).
    /// Used with the distance from a root as rank, so paths head outward.
    OutwardFirst(&'r dyn Fn(VertexId) -> u64),
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    to: usize,
    cap: u32,
    orig: u32,
}

pub(crate) struct VertexFlow<'g, 'r, G: ?Sized, A, T> {
    graph: &'g G,
    allowed: A,
    is_target: T,
    order: SearchOrder<'r>,
    index: BTreeMap<VertexId, usize>,
    verts: Vec<VertexId>,
    expanded: Vec<bool>,
    arcs: Vec<Arc>,
    node_arcs: Vec<Vec<usize>>,
    value: usize,
    saturated: bool,
}

impl<'g, 'r, G, A, T> VertexFlow<'g, 'r, G, A, T>
where
    G: Adjacency + ?Sized,
    A: Fn(VertexId) -> bool,
    T: Fn(VertexId) -> bool,
{
    pub(crate) fn new(graph: &'g G, sources: &[VertexId], allowed: A, is_target: T, order: SearchOrder<'r>) -> Self {
        let mut flow = VertexFlow {
            graph,
            allowed,
            is_target,
            order,
            index: BTreeMap::new(),
            verts: Vec::new(),
            expanded: Vec::new(),
            arcs: Vec::new(),
            node_arcs: vec![Vec::new(), Vec::new()],
            value: 0,
            saturated: false,
        };
        let mut seen = BTreeSet::new();
        for &s in sources {
            if seen.insert(s) && flow.admits(s) {
                let k = flow.discover(s);
                flow.add_arc(SOURCE, in_node(k), UNBOUNDED);
            }
        }
        flow
    }

    fn admits(&self, v: VertexId) -> bool {
        self.graph.contains(v) && (self.allowed)(v)
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, orig: cap });
        self.arcs.push(Arc { to: from, cap: 0, orig: 0 });
        self.node_arcs[from].push(id);
        self.node_arcs[to].push(id + 1);
    }

    fn discover(&mut self, v: VertexId) -> usize {
        if let Some(&k) = self.index.get(&v) {
            return k;
        }
        let k = self.verts.len();
        self.index.insert(v, k);
        self.verts.push(v);
        self.expanded.push(false);
        self.node_arcs.push(Vec::new());
        self.node_arcs.push(Vec::new());
        self.add_arc(in_node(k), out_node(k), 1);
        k
    }

    fn expand(&mut self, k: usize) {
        if self.expanded[k] {
            return;
        }
        self.expanded[k] = true;
        let v = self.verts[k];
        if (self.is_target)(v) {
            self.add_arc(out_node(k), SINK, UNBOUNDED);
        }
        let mut nbrs: Vec<VertexId> = self.graph.neighbors_of(v).into_iter().filter(|&w| self.admits(w)).collect();
        if let SearchOrder::OutwardFirst(rank) = self.order {
            nbrs.sort_by_key(|&w| (core::cmp::Reverse(rank(w)), w));
        }
        for w in nbrs {
            let kw = self.discover(w);
            self.add_arc(out_node(k), in_node(kw), UNBOUNDED);
        }
    }

    /// Makes sure every arc leaving `node` exists.
    fn prepare(&mut self, node: usize) {
        if node >= 2 && node % 2 == 1 {
            self.expand((node - 3) / 2);
        }
    }

    /// Residual search from the source. Returns the arc used to enter each
    /// reached node, and whether the sink was reached.
    fn search(&mut self) -> (BTreeMap<usize, usize>, bool) {
        let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
        let mut visited = BTreeSet::from([SOURCE]);
        match self.order {
            SearchOrder::Breadth => {
                let mut queue = VecDeque::from([SOURCE]);
                while let Some(node) = queue.pop_front() {
                    self.prepare(node);
                    for idx in 0..self.node_arcs[node].len() {
                        let id = self.node_arcs[node][idx];
                        let arc = self.arcs[id];
                        if arc.cap > 0 && visited.insert(arc.to) {
                            parent.insert(arc.to, id);
                            if arc.to == SINK {
                                return (parent, true);
                            }
                            queue.push_back(arc.to);
                        }
                    }
                }
            }
            SearchOrder::OutwardFirst(_) => {
                let mut stack = vec![(SOURCE, 0usize)];
                while let Some(&mut (node, ref mut next)) = stack.last_mut() {
                    if *next == 0 {
                        self.prepare(node);
                    }
                    let mut pushed = None;
                    while *next < self.node_arcs[node].len() {
                        let id = self.node_arcs[node][*next];
                        *next += 1;
                        let arc = self.arcs[id];
                        if arc.cap > 0 && visited.insert(arc.to) {
                            parent.insert(arc.to, id);
                            pushed = Some(arc.to);
                            break;
                        }
                    }
                    match pushed {
                        Some(SINK) => return (parent, true),
                        Some(to) => stack.push((to, 0)),
                        None => {
                            stack.pop();
                        }
                    }
                }
            }
        }
        (parent, false)
    }

    fn augment(&mut self, parent: &BTreeMap<usize, usize>) {
        let mut node = SINK;
        while node != SOURCE {
            let id = parent[&node];
            self.arcs[id].cap -= 1;
            self.arcs[id ^ 1].cap += 1;
            node = self.arcs[id ^ 1].to;
        }
        self.value += 1;
    }

    /// Augments until no augmenting path remains or `limit` units flow.
    pub(crate) fn run(&mut self, limit: Option<usize>) -> usize {
        while limit.is_none_or(|l| self.value < l) {
            let (parent, found) = self.search();
            if !found {
                self.saturated = true;
                break;
            }
            self.augment(&parent);
        }
        self.value
    }

    pub(crate) fn is_maximum(&self) -> bool {
        self.saturated
    }

    /// Source-to-sink vertex sequences carrying flow, in source order.
    pub(crate) fn paths(&self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        for &start in &self.node_arcs[SOURCE] {
            let arc = self.arcs[start];
            if arc.orig == 0 || arc.orig == arc.cap {
                continue;
            }
            let mut path = Vec::new();
            let mut node = arc.to;
            while node != SINK {
                if node.is_multiple_of(2) {
                    path.push(self.verts[(node - 2) / 2]);
                }
                node = self.node_arcs[node]
                    .iter()
                    .map(|&id| self.arcs[id])
                    .find(|a| a.orig > 0 && a.cap < a.orig)
                    .map(|a| a.to)
                    .expect("flow is conserved along a path");
            }
            out.push(path);
        }
        out
    }

    /// Vertices split by the minimum cut. Only meaningful once
    /// [`run`](Self::run) has saturated the network.
    pub(crate) fn separator(&mut self) -> BTreeSet<VertexId> {
        debug_assert!(self.saturated);
        let (parent, _) = self.search();
        let reached = |node: usize| node == SOURCE || parent.contains_key(&node);
        (0..self.verts.len())
            .filter(|&k| reached(in_node(k)) && !reached(out_node(k)))
            .map(|k| self.verts[k])
            .collect()
    }
}

const fn in_node(k: usize) -> usize {
    2 + 2 * k
}

const fn out_node(k: usize) -> usize {
    3 + 2 * k
}
