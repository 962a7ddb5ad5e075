use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::assemble::{bare_column, positions, Assembler, Rung, RungRequest, RungSource};
use super::{Built, Stage};
use crate::disjoint_paths::{Path, PathFamily};
use crate::graph::{FiniteGraph, HexPrefixSpec, VertexId};
use crate::rays::Ray;
use crate::verify::Embedding;
use crate::{Error, Result};

/// Bookkeeping of a successful [`lemma_construct`] run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTrace {
    /// The path of the first family whose end on `C` comes first along `C`.
    pub base: Path,
    /// Position of the base path's end on `C`.
    pub c0: usize,
    /// Positions `(x, x')` on `C` of each rung's segment, in construction order.
    pub c_segments: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaOutput {
    pub embedding: Embedding,
    pub trace: LemmaTrace,
}

/// One family's paths as `(position on C, position on L, path)`, sorted.
type Attachments = Vec<(usize, usize, Path)>;

struct ThroughC<'a> {
    c: &'a Ray,
    families: Vec<Attachments>,
    /// Last position on `C` consumed by a rung.
    c_cursor: Option<usize>,
    segments: Vec<(usize, usize)>,
}

impl RungSource for ThroughC<'_> {
    fn next_rung(&mut self, req: &RungRequest, free: &dyn Fn(VertexId) -> bool) -> Option<Rung> {
        let beyond = |x: usize| self.c_cursor.is_none_or(|c| x > c);
        let clear = |p: &Path| p.interior().iter().all(|&v| free(v));
        for (x, lp, p) in &self.families[req.col] {
            if !beyond(*x) || *lp < req.left_min || !clear(p) {
                continue;
            }
            let inner: BTreeSet<VertexId> = p.interior().iter().copied().collect();
            for (x2, lq, q) in &self.families[req.col + 1] {
                if *x2 <= *x || *lq < req.right_min || !clear(q) || q.interior().iter().any(|v| inner.contains(v)) {
                    continue;
                }
                let mut path = p.0.clone();
                path.extend_from_slice(&self.c.vertices[x + 1..=*x2]);
                path.extend(q.iter().rev().skip(1));
                self.c_cursor = Some(*x2);
                self.segments.push((*x, *x2));
                return Some(Rung { left_pos: *lp, right_pos: *lq, path });
            }
        }
        None
    }
}

/// Grid prefix from a ray `C` and rays `L_0, L_1, ...` where `families[j]`
/// holds `L_j`–`C` paths.
///
/// Column `i` runs along a tail of `L_i`. The rung between columns `i` and
/// `i + 1` goes down a path of `families[i]` to `C`, along `C`, and back up
/// a path of `families[i + 1]`. Each rung's segment of `C` starts strictly
/// after every vertex of `C` used so far, so the consumed segments are
/// disjoint and increasing along `C`.
pub fn lemma_construct(
    host: &FiniteGraph,
    c: &Ray,
    l: &[Ray],
    families: &[PathFamily],
    spec: HexPrefixSpec,
) -> Result<Built<LemmaOutput>> {
    let cols = spec.cols as usize;
    if cols > l.len() || cols > families.len() {
        return Err(Error::domain(format!("{cols} columns need {cols} rays and families")));
    }
    let mut seen = c.vertex_set();
    if !l.iter().flat_map(|r| r.vertices.iter()).all(|&v| seen.insert(v)) {
        return Err(Error::domain("rays C, L_0, L_1, ... must be pairwise disjoint"));
    }
    for (j, family) in families.iter().enumerate().take(cols) {
        family.check(host, &l[j], c).map_err(|e| Error::domain(format!("family {j}: {e}")))?;
    }
    let on_c = positions(c);
    let attachments: Vec<Attachments> = (0..cols)
        .map(|j| {
            let on_l = positions(&l[j]);
            let mut a: Attachments = families[j].paths.iter().map(|p| (on_c[&p.last()], on_l[&p.first()], p.clone())).collect();
            a.sort();
            a
        })
        .collect();
    let Some((c0, _, base)) = attachments[0].first().cloned() else {
        return Ok(Built::Insufficient { stage: Stage::Base, diagnostic: "the first family is empty".into() });
    };
    let finish = |embedding, segments| LemmaOutput { embedding, trace: LemmaTrace { base: base.clone(), c0, c_segments: segments } };
    if cols == 1 {
        return Ok(bare_column(host, &l[0], spec.depth)?.map(|e| finish(e, Vec::new())));
    }
    let mut source = ThroughC { c, families: attachments, c_cursor: None, segments: Vec::new() };
    let built = Assembler::new(host, spec, &l[..cols], &c.vertex_set()).run(&mut source)?;
    Ok(built.map(|e| finish(e, core::mem::take(&mut source.segments))))
}

/// Positions on `C` of the segment each rung runs along, read back from an
/// embedding. Rungs are visited in the order the construction builds them.
pub fn c_segments(emb: &Embedding, c: &Ray) -> Vec<(usize, usize)> {
    let on_c: BTreeMap<VertexId, usize> = positions(c);
    let mut rungs: Vec<_> = emb.edge_paths.iter().filter(|(((i, _), (k, _)), _)| i != k).collect();
    rungs.sort_by_key(|(((i, j), _), _)| (*j, *i));
    rungs
        .into_iter()
        .filter_map(|(_, p)| {
            let hits: Vec<usize> = p.iter().filter_map(|v| on_c.get(v).copied()).collect();
            Some((*hits.first()?, *hits.last()?))
        })
        .collect()
}
