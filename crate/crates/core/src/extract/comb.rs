use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use super::assemble::{bare_column, positions, Assembler, Rung, RungRequest, RungSource};
use super::{Built, Stage};
use crate::disjoint_paths::PathFamily;
use crate::graph::{FiniteGraph, HexPrefixSpec, VertexId};
use crate::rays::Ray;
use crate::verify::Embedding;
use crate::{Error, Result};

/// Rung candidates per column pair as `(left_pos, right_pos, path)`, sorted.
struct FamilyRungs {
    candidates: Vec<Vec<(usize, usize, Vec<VertexId>)>>,
}

impl RungSource for FamilyRungs {
    fn next_rung(&mut self, req: &RungRequest, free: &dyn Fn(VertexId) -> bool) -> Option<Rung> {
        self.candidates[req.col]
            .iter()
            .find(|(l, r, path)| {
                *l >= req.left_min && *r >= req.right_min && path[1..path.len() - 1].iter().all(|&v| free(v))
            })
            .map(|(l, r, path)| Rung { left_pos: *l, right_pos: *r, path: path.clone() })
    }
}

/// Grid prefix on consecutive rays of a chain: column `i` runs along a tail
/// of `chain[i]` and every rung between columns `i` and `i + 1` is a path of
/// `families[i]`, taken greedily in increasing position order.
pub fn comb_construct(
    host: &FiniteGraph,
    chain: &[Ray],
    families: &[PathFamily],
    spec: HexPrefixSpec,
) -> Result<Built<Embedding>> {
    let cols = spec.cols as usize;
    if cols > chain.len() {
        return Err(Error::domain(format!("{cols} columns need {cols} rays, chain has {}", chain.len())));
    }
    if families.len() + 1 < cols {
        return Err(Error::domain("need a family between every pair of consecutive columns"));
    }
    let mut seen = BTreeSet::new();
    if !chain.iter().flat_map(|r| r.vertices.iter()).all(|&v| seen.insert(v)) {
        return Err(Error::domain("chain rays intersect"));
    }
    for (i, family) in families.iter().enumerate().take(cols.saturating_sub(1)) {
        family.check(host, &chain[i], &chain[i + 1]).map_err(|e| Error::domain(format!("family {i}: {e}")))?;
    }
    if cols == 1 {
        return bare_column(host, &chain[0], spec.depth);
    }
    let pos: Vec<BTreeMap<VertexId, usize>> = chain.iter().map(positions).collect();
    let candidates = (0..cols - 1)
        .map(|i| {
            let mut c: Vec<_> =
                families[i].paths.iter().map(|p| (pos[i][&p.first()], pos[i + 1][&p.last()], p.0.clone())).collect();
            c.sort();
            c
        })
        .collect();
    let chain = &chain[..cols];
    Assembler::new(host, spec, chain, &BTreeSet::new()).run(&mut FamilyRungs { candidates }).map(|b| match b {
        Built::Insufficient { stage: Stage::Rung { col, row }, diagnostic } => Built::Insufficient {
            stage: Stage::Rung { col, row },
            diagnostic: format!("{diagnostic}; family {col} exhausted"),
        },
        other => other,
    })
}
