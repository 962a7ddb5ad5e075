//! Frontier rays, finite end-equivalence and thick-end witnesses.
//!
//! An infinite ray cannot be observed through a finite window, so a ray here
//! is a *frontier path*: a path inside the ball of radius `R` whose last
//! vertex lies on the sphere of radius `R`. Two rays belong to the same end
//! at radius `r` when their tails outside the ball of radius `r` lie in one
//! component of `ball(R) - ball(r)`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::disjoint_paths::trim;
use crate::flow::{SearchOrder, VertexFlow};
use crate::graph::{Adjacency, LazyGraph, Truncation, VertexId, DEFAULT_VERTEX_LIMIT};
use crate::{Error, Result};

/// An ordered, repetition-free path; list order is the ray's natural order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ray {
    pub vertices: Vec<VertexId>,
    /// Last vertex lies on the truncation sphere.
    pub frontier: bool,
}

impl Ray {
    pub fn new(vertices: Vec<VertexId>) -> Self {
        Ray { vertices, frontier: false }
    }

    pub fn frontier(vertices: Vec<VertexId>) -> Self {
        Ray { vertices, frontier: true }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }
}

/// `k` disjoint frontier rays of one finite end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndWitness {
    pub root: VertexId,
    pub rays: Vec<Ray>,
    pub radius: u64,
    pub equivalence_radius: u64,
}

impl EndWitness {
    /// Re-checks every invariant from scratch against `g`.
    pub fn validate(&self, g: &LazyGraph) -> core::result::Result<(), String> {
        if self.equivalence_radius >= self.radius {
            return Err("equivalence radius must be below the truncation radius".into());
        }
        let trunc = Truncation::new(g, self.root, self.radius, DEFAULT_VERTEX_LIMIT).map_err(|e| format!("{e}"))?;
        let mut seen = BTreeSet::new();
        for (n, ray) in self.rays.iter().enumerate() {
            if !ray.frontier {
                return Err(format!("ray {n} is not marked as a frontier ray"));
            }
            check_frontier_ray(&trunc, ray).map_err(|e| format!("ray {n}: {e}"))?;
            if !ray.vertices.iter().all(|&v| seen.insert(v)) {
                return Err(format!("ray {n} meets an earlier ray"));
            }
        }
        for i in 0..self.rays.len() {
            for j in i + 1..self.rays.len() {
                if !same_end_in(&trunc, &self.rays[i], &self.rays[j], self.equivalence_radius) {
                    return Err(format!("rays {i} and {j} are separated by the ball of radius {}", self.equivalence_radius));
                }
            }
        }
        Ok(())
    }
}

fn check_frontier_ray(trunc: &Truncation<'_>, ray: &Ray) -> Result<()> {
    if ray.is_empty() {
        return Err(Error::domain("empty ray"));
    }
    let simple = ray.vertex_set().len() == ray.len();
    let inside = ray.vertices.iter().all(|&v| trunc.distance(v).is_some());
    let walk = ray.vertices.windows(2).all(|w| trunc.graph().neighbors_of(w[0]).contains(&w[1]));
    if !(simple && inside && walk) {
        return Err(Error::domain("not a path of the truncation"));
    }
    if trunc.distance(ray.vertices[ray.len() - 1]) != Some(trunc.radius()) {
        return Err(Error::domain("ray does not end on the truncation sphere"));
    }
    Ok(())
}

/// Outcome of [`find_disjoint_rays`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RaySearch {
    Found(Vec<Ray>),
    /// Only `found` disjoint rays exist; a separator of that size cuts the
    /// start sphere from the frontier.
    NotFound { found: usize, separator_size: usize },
}

/// A disjoint system of frontier rays and where it starts.
pub(crate) struct FrontierSystem {
    pub rays: Vec<Ray>,
    pub separator_size: Option<usize>,
}

/// How many larger start spheres to try when dead ends on the first one
/// keep the flow below `k`.
const START_RETRIES: u64 = 16;

/// The rays start on the smallest sphere with at least `k` vertices (or the
/// largest sphere when none is big enough) and run to the sphere of radius
/// `trunc.radius()`. Spheres can contain dead ends, so if the flow stays
/// below `k` the next few spheres are tried as well.
pub(crate) fn frontier_system(trunc: &Truncation<'_>, k: usize, limit: Option<usize>) -> Result<FrontierSystem> {
    let radius = trunc.radius();
    if radius == 0 {
        return Err(Error::domain("truncation radius must be positive"));
    }
    let sizes = trunc.sphere_sizes(radius - 1, k, DEFAULT_VERTEX_LIMIT)?;
    let (first, last) = match sizes.iter().position(|&s| s >= k) {
        Some(r) => (r as u64, (r as u64 + START_RETRIES).min(radius - 1)),
        None => {
            let best = *sizes.iter().max().unwrap_or(&1);
            let r = sizes.iter().position(|&s| s == best).unwrap_or(0) as u64;
            (r, r)
        }
    };
    let mut best: Option<FrontierSystem> = None;
    for source_radius in first..=last {
        let system = system_from(trunc, source_radius, limit)?;
        let enough = system.rays.len() >= k;
        if best.as_ref().is_none_or(|b| system.rays.len() > b.rays.len()) {
            best = Some(system);
        }
        if enough {
            break;
        }
    }
    Ok(best.expect("at least one start sphere is tried"))
}

fn system_from(trunc: &Truncation<'_>, source_radius: u64, limit: Option<usize>) -> Result<FrontierSystem> {
    let radius = trunc.radius();
    let sources = trunc.sphere(source_radius, DEFAULT_VERTEX_LIMIT)?;
    let on_start: BTreeSet<_> = sources.iter().copied().collect();
    let rank = |v: VertexId| trunc.distance(v).unwrap_or(0);
    let mut flow = VertexFlow::new(trunc, &sources, |_| true, |v| trunc.distance(v) == Some(radius), SearchOrder::OutwardFirst(&rank));
    let value = flow.run(limit);
    let rays = flow
        .paths()
        .iter()
        .map(|p| Ray::frontier(trim(p, |v| on_start.contains(&v), |v| trunc.distance(v) == Some(radius)).0))
        .collect();
    let separator_size = flow.is_maximum().then_some(value);
    log::debug!("frontier system: start radius {source_radius}, {value} rays to radius {radius}");
    Ok(FrontierSystem { rays, separator_size })
}

/// `k` pairwise disjoint frontier rays inside the ball of radius `radius`.
pub fn find_disjoint_rays(g: &LazyGraph, root: VertexId, k: usize, radius: u64) -> Result<RaySearch> {
    if k == 0 || radius < k as u64 {
        return Err(Error::domain("need k >= 1 and radius >= k"));
    }
    let trunc = Truncation::new(g, root, radius, DEFAULT_VERTEX_LIMIT)?;
    let system = frontier_system(&trunc, k, Some(k))?;
    if system.rays.len() >= k {
        Ok(RaySearch::Found(system.rays))
    } else {
        let found = system.rays.len();
        Ok(RaySearch::NotFound { found, separator_size: system.separator_size.unwrap_or(found) })
    }
}

/// Suffix of `ray` after its last vertex inside the ball of radius `r`.
fn tail<'a>(trunc: &Truncation<'_>, ray: &'a Ray, r: u64) -> &'a [VertexId] {
    let start = ray.vertices.iter().rposition(|&v| trunc.distance(v).is_some_and(|d| d <= r)).map_or(0, |p| p + 1);
    &ray.vertices[start..]
}

pub(crate) fn same_end_in(trunc: &Truncation<'_>, a: &Ray, b: &Ray, r: u64) -> bool {
    let (ta, tb) = (tail(trunc, a, r), tail(trunc, b, r));
    if ta.is_empty() || tb.is_empty() {
        return false;
    }
    let g = trunc.graph();
    if g.is_tree() {
        // In a tree the x–y path comes closest to the root at distance
        // (d(x) + d(y) - d(x, y)) / 2 and never leaves the ball of radius max(d(x), d(y)).
        let (x, y) = (ta[0], tb[0]);
        let (dx, dy) = (trunc.distance(x).unwrap_or(0), trunc.distance(y).unwrap_or(0));
        let dxy = g.distance(x, y).unwrap_or(u64::MAX);
        return dx + dy >= dxy && (dx + dy - dxy) / 2 > r;
    }
    let goal: BTreeSet<_> = tb.iter().copied().collect();
    let outside = |v: VertexId| trunc.distance(v).is_some_and(|d| d > r);
    let mut seen: BTreeSet<_> = ta.iter().copied().collect();
    let mut queue: VecDeque<_> = ta.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        if goal.contains(&v) {
            return true;
        }
        for w in trunc.neighbors_of(v) {
            if outside(w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    false
}

/// Whether the tails of `a` and `b` beyond the ball of radius `r` lie in one
/// component of `ball(radius) - ball(r)`.
pub fn same_end(g: &LazyGraph, root: VertexId, a: &Ray, b: &Ray, r: u64, radius: u64) -> Result<bool> {
    if r >= radius {
        return Err(Error::domain("need r < R"));
    }
    let trunc = Truncation::new(g, root, radius, DEFAULT_VERTEX_LIMIT)?;
    check_frontier_ray(&trunc, a)?;
    check_frontier_ray(&trunc, b)?;
    Ok(same_end_in(&trunc, a, b, r))
}

/// Outcome of [`thick_end_witness`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessSearch {
    Found(EndWitness),
    NotFound {
        /// Size of the disjoint frontier-ray system.
        rays_found: usize,
        /// Largest group of pairwise equivalent rays in that system.
        best_group: usize,
        /// Menger certificate when the system itself has fewer than `k` rays.
        separator_size: Option<usize>,
    },
}

/// Searches for `k` disjoint frontier rays that are pairwise equivalent at radius `r`.
///
/// One maximum disjoint frontier system is computed and grouped by
/// [`same_end`]; the largest group wins. Other decompositions of the flow are
/// not tried, so `NotFound` is a report about this search, not a proof.
pub fn thick_end_witness(g: &LazyGraph, root: VertexId, k: usize, r: u64, radius: u64) -> Result<WitnessSearch> {
    if k < 2 {
        return Err(Error::domain("a thick-end witness needs k >= 2"));
    }
    if r >= radius {
        return Err(Error::domain("need r < R"));
    }
    let trunc = Truncation::new(g, root, radius, DEFAULT_VERTEX_LIMIT)?;
    let system = frontier_system(&trunc, k, None)?;
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for (n, ray) in system.rays.iter().enumerate() {
        match groups.iter_mut().find(|grp| same_end_in(&trunc, &system.rays[grp[0]], ray, r)) {
            Some(grp) => grp.push(n),
            None => groups.push(alloc::vec![n]),
        }
    }
    let best = groups.iter().enumerate().max_by_key(|(n, grp)| (grp.len(), core::cmp::Reverse(*n))).map(|(_, grp)| grp);
    match best {
        Some(grp) if grp.len() >= k => Ok(WitnessSearch::Found(EndWitness {
            root,
            rays: grp.iter().take(k).map(|&n| system.rays[n].clone()).collect(),
            radius,
            equivalence_radius: r,
        })),
        _ => Ok(WitnessSearch::NotFound {
            rays_found: system.rays.len(),
            best_group: best.map_or(0, Vec::len),
            separator_size: (system.rays.len() < k).then_some(system.separator_size.unwrap_or(system.rays.len())),
        }),
    }
}
