//! Column-by-column assembly of a hexagonal grid prefix on a list of rays.
//!
//! Column `i` of the pattern is laid along ray `i`: branch vertices sit at
//! increasing positions on the ray and vertical edges are the ray segments
//! between them. Rows are processed bottom-up, rungs left to right. A rung
//! comes from a [`RungSource`], which sees the lowest positions still
//! allowed on both rays and a predicate telling which host vertices are free.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::{Built, Stage};
use crate::disjoint_paths::Path;
use crate::graph::{hex_rung, FiniteGraph, HexPrefixSpec, PatternVertex, VertexId};
use crate::rays::Ray;
use crate::verify::{verify_embedding, Embedding};
use crate::{Error, Result};

/// What a rung `(col, row)`–`(col + 1, row)` may use.
pub(crate) struct RungRequest {
    pub col: usize,
    /// Smallest allowed position on ray `col`.
    pub left_min: usize,
    /// Smallest allowed position on ray `col + 1`.
    pub right_min: usize,
}

/// A rung path from ray `col` to ray `col + 1`.
pub(crate) struct Rung {
    pub left_pos: usize,
    pub right_pos: usize,
    pub path: Vec<VertexId>,
}

pub(crate) trait RungSource {
    /// The preferred admissible rung, if any. `free(v)` is true for host
    /// vertices that a rung interior may use.
    fn next_rung(&mut self, req: &RungRequest, free: &dyn Fn(VertexId) -> bool) -> Option<Rung>;
}

pub(crate) struct Assembler<'a> {
    host: &'a FiniteGraph,
    spec: HexPrefixSpec,
    rays: &'a [Ray],
    protected: BTreeSet<VertexId>,
    used: BTreeSet<VertexId>,
    cursor: Vec<Option<usize>>,
    place: BTreeMap<PatternVertex, usize>,
    rungs: BTreeMap<PatternVertex, Vec<VertexId>>,
}

impl<'a> Assembler<'a> {
    /// `extra` lists host vertices that rung interiors must avoid besides the
    /// column rays themselves.
    pub fn new(host: &'a FiniteGraph, spec: HexPrefixSpec, rays: &'a [Ray], extra: &BTreeSet<VertexId>) -> Self {
        let mut protected: BTreeSet<VertexId> = rays.iter().flat_map(|r| r.vertices.iter().copied()).collect();
        protected.extend(extra.iter().copied());
        Assembler {
            host,
            spec,
            rays,
            protected,
            used: BTreeSet::new(),
            cursor: alloc::vec![None; spec.cols as usize],
            place: BTreeMap::new(),
            rungs: BTreeMap::new(),
        }
    }

    fn shortfall(&self, stage: Stage, diagnostic: alloc::string::String) -> Built<Embedding> {
        log::debug!("assembly stopped at {stage}: {diagnostic}");
        Built::Insufficient { stage, diagnostic }
    }

    /// Places `(col, row)` at `pos`, claiming the ray segment from the
    /// previous vertex of the column.
    fn put(&mut self, col: usize, row: u32, pos: usize) {
        let ray = &self.rays[col].vertices;
        let from = self.cursor[col].map_or(pos, |c| c + 1);
        self.used.extend(ray[from..=pos].iter().copied());
        self.cursor[col] = Some(pos);
        self.place.insert((col as u32, row), pos);
    }

    /// Lowest position on ray `col` that an unplaced vertex may take.
    fn next_free(&self, col: usize) -> usize {
        self.cursor[col].map_or(0, |c| c + 1)
    }

    pub fn run(mut self, source: &mut dyn RungSource) -> Result<Built<Embedding>> {
        let cols = self.spec.cols as usize;
        let depth = self.spec.depth;
        for j in 0..depth {
            for i in 0..cols {
                let here = (i as u32, j);
                if self.place.contains_key(&here) {
                    continue;
                }
                if i + 1 < cols && hex_rung(i as u64, j as u64) {
                    let admitting = self.cursor[i + 1].is_none();
                    // a column is admitted at its first rung, with its lower rows below it
                    let req = RungRequest {
                        col: i,
                        left_min: self.next_free(i),
                        right_min: if admitting { j as usize } else { self.next_free(i + 1) },
                    };
                    let used = &self.used;
                    let protected = &self.protected;
                    let free = |v: VertexId| !used.contains(&v) && !protected.contains(&v);
                    let Some(rung) = source.next_rung(&req, &free) else {
                        return Ok(self.shortfall(
                            Stage::Rung { col: i, row: j },
                            format!("no admissible path from ray {i} to ray {}", i + 1),
                        ));
                    };
                    if rung.left_pos < req.left_min
                        || rung.right_pos < req.right_min
                        || rung.left_pos >= self.rays[i].len()
                        || rung.right_pos >= self.rays[i + 1].len()
                    {
                        return Err(Error::domain("rung source ignored its position bounds"));
                    }
                    self.put(i, j, rung.left_pos);
                    if admitting {
                        for below in 0..j {
                            self.put(i + 1, below, rung.right_pos - (j - below) as usize);
                        }
                    }
                    self.put(i + 1, j, rung.right_pos);
                    self.used.extend(rung.path.iter().copied());
                    self.rungs.insert(here, rung.path);
                } else if self.cursor[i].is_some() || i == 0 {
                    let pos = self.next_free(i);
                    if pos >= self.rays[i].len() {
                        return Ok(self.shortfall(Stage::Column { col: i }, format!("ray {i} is too short for row {j}")));
                    }
                    self.put(i, j, pos);
                }
            }
        }
        for i in 0..cols {
            // columns that never meet a rung when the prefix is shallow
            if self.cursor[i].is_none() {
                if self.rays[i].len() < depth as usize {
                    return Ok(self.shortfall(Stage::Column { col: i }, format!("ray {i} is too short")));
                }
                for j in 0..depth {
                    self.put(i, j, j as usize);
                }
            }
        }
        let emb = self.embedding();
        let violations = verify_embedding(self.host, &emb);
        if !violations.is_empty() {
            log::warn!("assembled certificate rejected: {:?}", violations);
            return Err(Error::CertificateRejected { count: violations.len() });
        }
        Ok(Built::Success(emb))
    }

    fn embedding(&self) -> Embedding {
        let at = |(i, j): PatternVertex| self.rays[i as usize].vertices[self.place[&(i, j)]];
        let branch = self.spec.vertices().map(|p| (p, at(p))).collect();
        let mut edge_paths = BTreeMap::new();
        for (a, b) in self.spec.edges() {
            let path = if a.0 == b.0 {
                let ray = &self.rays[a.0 as usize].vertices;
                ray[self.place[&a]..=self.place[&b]].to_vec()
            } else {
                self.rungs[&a].clone()
            };
            edge_paths.insert((a, b), Path(path));
        }
        Embedding { pattern: self.spec, branch, edge_paths }
    }
}

/// Single column: rows on consecutive vertices of the first ray.
pub(crate) fn bare_column(host: &FiniteGraph, ray: &Ray, depth: u32) -> Result<Built<Embedding>> {
    let spec = HexPrefixSpec::new(1, depth)?;
    let rays = core::slice::from_ref(ray);
    Assembler::new(host, spec, rays, &BTreeSet::new()).run(&mut NoRungs)
}

struct NoRungs;

impl RungSource for NoRungs {
    fn next_rung(&mut self, _: &RungRequest, _: &dyn Fn(VertexId) -> bool) -> Option<Rung> {
        None
    }
}

pub(crate) fn positions(ray: &Ray) -> BTreeMap<VertexId, usize> {
    ray.vertices.iter().enumerate().map(|(n, &v)| (v, n)).collect()
}
