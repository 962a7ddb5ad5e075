use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::disjoint_paths::{connecting_family, FamilySearch, Path, PathFamily};
use crate::graph::{ball, FiniteGraph, LazyGraph, VertexId};
use crate::rays::{EndWitness, Ray};
use crate::{Error, Result};

/// The auxiliary graph whose vertices are rays and whose edges carry path
/// families between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayAdjacency {
    pub rays: Vec<Ray>,
    /// Keyed by `(i, j)` with `i < j`; paths run from ray `i` to ray `j`.
    pub edges: BTreeMap<(usize, usize), PathFamily>,
    /// Reroutes, dropped rays and dropped edges, in the order they happened.
    pub log: Vec<String>,
}

impl RayAdjacency {
    /// The family between rays `i` and `j`, oriented from `i` to `j`.
    pub fn family(&self, i: usize, j: usize) -> Option<PathFamily> {
        if i < j {
            self.edges.get(&(i, j)).cloned()
        } else {
            self.edges.get(&(j, i)).map(PathFamily::reversed)
        }
    }

    /// Ray indices as vertices `0..rays.len()`, one edge per stored family.
    pub fn graph(&self) -> FiniteGraph {
        let mut g = FiniteGraph::new();
        for i in 0..self.rays.len() {
            g.add_vertex(VertexId(i as u64));
        }
        for &(i, j) in self.edges.keys() {
            g.insert_edge(VertexId(i as u64), VertexId(j as u64));
        }
        g
    }
}

/// Reroutes paths running from ray `target` towards a new ray: a path whose
/// interior meets another ray is cut down to its suffix after the last such
/// vertex, so it becomes a path from that ray. Returns the surviving paths
/// grouped by the ray they now start on.
pub fn reroute_family(rays: &[Ray], target: usize, family: &PathFamily) -> BTreeMap<usize, Vec<Path>> {
    let owner: BTreeMap<VertexId, usize> =
        rays.iter().enumerate().flat_map(|(n, r)| r.vertices.iter().map(move |&v| (v, n))).collect();
    let mut groups: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
    for path in &family.paths {
        let hit = (1..path.len().saturating_sub(1)).rev().find_map(|p| owner.get(&path[p]).map(|&n| (p, n)));
        match hit {
            Some((p, n)) => groups.entry(n).or_default().push(Path(path[p..].to_vec())),
            None => groups.entry(target).or_default().push(path.clone()),
        }
    }
    groups
}

/// Adds the witness rays one at a time. Each new ray gets a family to the
/// most recently added ray; if fewer than `t` of its paths stay clear of the
/// other rays, it attaches instead to the ray that at least `t` paths reach
/// last (via [`reroute_family`]). Earlier rays are tried as targets in turn;
/// a ray that attaches nowhere is dropped. Paths of existing families that
/// the new ray crosses are removed, and families falling below `t` are dropped.
pub fn ray_adjacency_in(host: &FiniteGraph, rays: &[Ray], t: usize) -> Result<RayAdjacency> {
    if t == 0 {
        return Err(Error::domain("threshold t must be positive"));
    }
    let mut f = RayAdjacency { rays: Vec::new(), edges: BTreeMap::new(), log: Vec::new() };
    for (n, ray) in rays.iter().enumerate() {
        let m = f.rays.len();
        if m == 0 {
            f.rays.push(ray.clone());
            continue;
        }
        let mut attached = None;
        let mut best_seen = 0;
        for target in (0..m).rev() {
            let family = match connecting_family(host, &f.rays[target], ray, 1, &BTreeSet::new())? {
                FamilySearch::Found(family) => family,
                FamilySearch::Insufficient { .. } => continue,
            };
            let mut groups = reroute_family(&f.rays, target, &family);
            let chosen = match groups.get(&target) {
                Some(clean) if clean.len() >= t => Some(target),
                _ => groups.iter().filter(|(_, g)| g.len() >= t).max_by_key(|(&s, g)| (g.len(), core::cmp::Reverse(s))).map(|(&s, _)| s),
            };
            best_seen = best_seen.max(groups.values().map(Vec::len).max().unwrap_or(0));
            if let Some(s) = chosen {
                if s != target {
                    f.log.push(format!("ray {n}: paths towards ray {target} rerouted to start on ray {s}"));
                }
                attached = Some((s, PathFamily::new(groups.remove(&s).unwrap_or_default())));
                break;
            }
        }
        let Some((s, family)) = attached else {
            f.log.push(format!("ray {n} dropped: at most {best_seen} usable connecting paths, need {t}"));
            continue;
        };
        let on_new = ray.vertex_set();
        let mut emptied = Vec::new();
        for (&key, fam) in f.edges.iter_mut() {
            let before = fam.len();
            fam.paths.retain(|p| p.interior().iter().all(|v| !on_new.contains(v)));
            if fam.len() < before {
                f.log.push(format!("ray {n} crosses {} paths between rays {} and {}", before - fam.len(), key.0, key.1));
            }
            if fam.len() < t {
                emptied.push(key);
            }
        }
        for key in emptied {
            f.edges.remove(&key);
            f.log.push(format!("edge {}-{} dropped below {t} paths", key.0, key.1));
        }
        f.rays.push(ray.clone());
        f.edges.insert((s, m), family);
    }
    Ok(f)
}

/// [`ray_adjacency_in`] on the ball of the witness radius around its root.
pub fn build_ray_adjacency(g: &LazyGraph, witness: &EndWitness, t: usize) -> Result<RayAdjacency> {
    let host = ball(g, witness.root, witness.radius)?;
    ray_adjacency_in(&host, &witness.rays, t)
}
