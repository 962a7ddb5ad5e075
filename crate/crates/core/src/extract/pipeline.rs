use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::adjacency::{ray_adjacency_in, RayAdjacency};
use super::assemble::{bare_column, positions};
use super::{comb_construct, lemma_construct, Built, Stage};
use crate::disjoint_paths::{Path, PathFamily};
use crate::graph::{ball, FiniteGraph, HexPrefixSpec, LazyGraph, VertexId};
use crate::rays::{thick_end_witness, WitnessSearch};
use crate::star_comb::{star_or_comb, StarOrComb};
use crate::verify::{verify_embedding, Embedding};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Case {
    Star,
    Comb,
    /// A single column needs no rungs.
    Direct,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Case::Star => "star",
            Case::Comb => "comb",
            Case::Direct => "direct",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PipelineParams {
    pub root: VertexId,
    /// Rays in the thick-end witness.
    pub k: usize,
    /// Radius of the ball that must not separate the witness rays.
    pub r: u64,
    /// Truncation radius.
    pub radius: u64,
    /// Minimum size of a path family between two rays.
    pub t: usize,
    pub spec: HexPrefixSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractionReport {
    pub params: PipelineParams,
    pub outcome: Built<Embedding>,
    pub case_taken: Option<Case>,
    /// One line per stage, in order.
    pub log: Vec<String>,
}

/// Witness, ray adjacency, star or comb, then the matching construction.
/// Every `Success` has passed [`verify_embedding`] against the ball of radius
/// `params.radius` around `params.root`.
pub fn halin_pipeline(g: &LazyGraph, params: PipelineParams) -> Result<ExtractionReport> {
    let PipelineParams { root, k, r, radius, t, spec } = params;
    if spec.cols as usize > k {
        return Err(Error::domain(format!("{} columns need at least as many rays, k = {k}", spec.cols)));
    }
    let mut report = ExtractionReport {
        params,
        outcome: Built::Insufficient { stage: Stage::Witness, diagnostic: String::new() },
        case_taken: None,
        log: Vec::new(),
    };
    let witness = match thick_end_witness(g, root, k, r, radius)? {
        WitnessSearch::Found(w) => w,
        WitnessSearch::NotFound { rays_found, best_group, separator_size } => {
            let mut diagnostic =
                format!("{k} rays requested; {rays_found} disjoint rays found, at most {best_group} in one end");
            if let Some(s) = separator_size {
                diagnostic.push_str(&format!("; separator size {s}"));
            }
            report.log.push(format!("witness: {diagnostic}"));
            report.outcome = Built::Insufficient { stage: Stage::Witness, diagnostic };
            return Ok(report);
        }
    };
    report.log.push(format!("witness: {k} equivalent rays at radius {radius}"));
    let host = ball(g, root, radius)?;
    report.log.push(format!("host: {} vertices, {} edges", host.num_vertices(), host.num_edges()));

    if spec.cols == 1 {
        report.case_taken = Some(Case::Direct);
        report.outcome = bare_column(&host, &witness.rays[0], spec.depth)?;
        return finish(&host, report);
    }

    let f = ray_adjacency_in(&host, &witness.rays, t)?;
    report.log.extend(f.log.iter().map(|l| format!("adjacency: {l}")));
    report.log.push(format!("adjacency: {} rays, {} families of >= {t} paths", f.rays.len(), f.edges.len()));
    let fg = f.graph();
    let component = largest_component(&fg);
    if component.len() < spec.cols as usize {
        let diagnostic = format!("largest connected set of rays has {} rays, need {}", component.len(), spec.cols);
        report.outcome = Built::Insufficient { stage: Stage::Adjacency, diagnostic };
        return Ok(report);
    }
    let sub = fg.induced(&component);
    match star_or_comb(&sub, &component, spec.cols as usize)? {
        StarOrComb::Comb(comb) => {
            report.case_taken = Some(Case::Comb);
            let spine: Vec<usize> = comb.spine.iter().map(|v| v.0 as usize).collect();
            report.log.push(format!("star_comb: comb with spine {spine:?}"));
            report.outcome = along_spine(&host, &f, &spine, spec)?;
        }
        StarOrComb::Star(star) if !star.uses_center_as_leaf() => {
            report.case_taken = Some(Case::Star);
            let center = star.center.0 as usize;
            let leaves: Vec<u64> = star.leaves.iter().map(|v| v.0).collect();
            report.log.push(format!("star_comb: star at ray {center} with leaves {leaves:?}"));
            let spokes: Vec<Vec<usize>> =
                star.spokes.iter().map(|s| s.iter().rev().map(|v| v.0 as usize).collect()).collect();
            let families: Vec<PathFamily> = spokes.iter().map(|s| compose_spoke(&host, &f, s)).collect();
            let leaves: Vec<_> = spokes.iter().map(|s| f.rays[s[0]].clone()).collect();
            report.outcome = lemma_construct(&host, &f.rays[center], &leaves, &families, spec)?.map(|o| o.embedding);
        }
        other => {
            let diagnostic = match other {
                StarOrComb::Star(_) => format!("only a star using its center as a leaf, {} columns", spec.cols),
                _ => format!("no star or comb with {} rays", spec.cols),
            };
            report.outcome = Built::Insufficient { stage: Stage::StarComb, diagnostic };
            return Ok(report);
        }
    }
    finish(&host, report)
}

fn finish(host: &FiniteGraph, mut report: ExtractionReport) -> Result<ExtractionReport> {
    match &report.outcome {
        Built::Success(emb) => {
            let violations = verify_embedding(host, emb);
            if !violations.is_empty() {
                return Err(Error::CertificateRejected { count: violations.len() });
            }
            report.log.push("verify: ok".into());
        }
        Built::Insufficient { stage, diagnostic } => report.log.push(format!("{stage}: {diagnostic}")),
    }
    Ok(report)
}

fn largest_component(g: &FiniteGraph) -> BTreeSet<VertexId> {
    let mut best = BTreeSet::new();
    let mut seen = BTreeSet::new();
    for v in g.vertices() {
        if seen.contains(&v) {
            continue;
        }
        let comp: BTreeSet<VertexId> = g.distances(v).into_keys().collect();
        seen.extend(comp.iter().copied());
        if comp.len() > best.len() {
            best = comp;
        }
    }
    best
}

/// Comb case: tries every window of consecutive spine rays, in both
/// directions, and keeps the first success.
fn along_spine(host: &FiniteGraph, f: &RayAdjacency, spine: &[usize], spec: HexPrefixSpec) -> Result<Built<Embedding>> {
    let cols = spec.cols as usize;
    let mut first_failure = None;
    let backwards: Vec<usize> = spine.iter().rev().copied().collect();
    for order in [spine, &backwards[..]] {
        for window in order.windows(cols) {
            let chain: Vec<_> = window.iter().map(|&i| f.rays[i].clone()).collect();
            let families: Vec<_> = window.windows(2).map(|w| f.family(w[0], w[1]).unwrap_or(PathFamily::new(Vec::new()))).collect();
            match comb_construct(host, &chain, &families, spec)? {
                Built::Success(emb) => return Ok(Built::Success(emb)),
                failure => {
                    log::debug!("spine window {window:?} failed: {failure:?}");
                    first_failure.get_or_insert(failure);
                }
            }
        }
    }
    Ok(first_failure.unwrap_or(Built::Insufficient { stage: Stage::StarComb, diagnostic: "spine too short".into() }))
}

/// Paths from the first ray of `spoke` to its last, each built by chaining
/// one path per family along the spoke and walking along the intermediate
/// rays between them. Compositions that revisit a vertex are discarded.
fn compose_spoke(host: &FiniteGraph, f: &RayAdjacency, spoke: &[usize]) -> PathFamily {
    let mut current: Vec<Path> = f.family(spoke[0], spoke[1]).map(|fam| fam.paths).unwrap_or_default();
    for w in spoke[1..].windows(2) {
        let (via, next) = (w[0], w[1]);
        let ray = &f.rays[via];
        let on_ray = positions(ray);
        let onward = f.family(via, next).map(|fam| fam.paths).unwrap_or_default();
        let starts: BTreeMap<usize, &Path> = onward.iter().map(|q| (on_ray[&q.first()], q)).collect();
        current = current
            .into_iter()
            .filter_map(|p| {
                let y = on_ray[&p.last()];
                let below = starts.range(..=y).next_back();
                let above = starts.range(y..).next();
                let (&x, q) = [below, above].into_iter().flatten().min_by_key(|(&x, _)| x.abs_diff(y))?;
                let mut joined = p.0.clone();
                if x >= y {
                    joined.extend_from_slice(&ray.vertices[y + 1..=x]);
                } else {
                    joined.extend(ray.vertices[x..y].iter().rev());
                }
                joined.extend_from_slice(&q[1..]);
                let path = Path(joined);
                path.is_simple().then_some(path)
            })
            .collect();
    }
    let (leaf, center) = (&f.rays[spoke[0]], &f.rays[spoke[spoke.len() - 1]]);
    let (on_leaf, on_center) = (leaf.vertex_set(), center.vertex_set());
    current.retain(|p| {
        p.is_path_in(host) && p.interior().iter().all(|v| !on_leaf.contains(v) && !on_center.contains(v))
    });
    PathFamily::new(current)
}
