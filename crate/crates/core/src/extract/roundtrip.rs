use alloc::format;
use alloc::vec::Vec;

use crate::graph::{FiniteGraph, LazyGraph, VertexId};
use crate::rays::{EndWitness, Ray};
use crate::verify::{verify_embedding, Embedding};
use crate::{Error, Result};

/// Reads `k` rays off the columns of a valid embedding in `host`.
///
/// Each column is the walk through its branch vertices along the vertical
/// edge paths. The witness radius is the largest distance from `root` that
/// every column reaches; each ray is the stretch of its column inside that
/// ball ending at its first vertex on the boundary.
pub fn witness_from_embedding(host: &FiniteGraph, root: VertexId, emb: &Embedding, k: usize, r: u64) -> Result<EndWitness> {
    if k < 2 || k > emb.pattern.cols as usize {
        return Err(Error::domain(format!("need 2 <= k <= {} columns, got k = {k}", emb.pattern.cols)));
    }
    let violations = verify_embedding(host, emb);
    if !violations.is_empty() {
        return Err(Error::domain(format!("embedding has {} violations", violations.len())));
    }
    let dist = host.distances(root);
    let columns: Vec<Vec<VertexId>> = (0..k as u32)
        .map(|i| {
            let mut col = alloc::vec![emb.branch[&(i, 0)]];
            for j in 1..emb.pattern.depth {
                col.extend_from_slice(&emb.edge_paths[&((i, j - 1), (i, j))][1..]);
            }
            col
        })
        .collect();
    let reach = |col: &Vec<VertexId>| col.iter().map(|v| dist.get(v).copied()).collect::<Option<Vec<u64>>>();
    let levels: Vec<Vec<u64>> =
        columns.iter().map(reach).collect::<Option<_>>().ok_or_else(|| Error::domain("a column is not connected to the root"))?;
    let radius = levels.iter().map(|l| *l.iter().max().unwrap()).min().unwrap();
    let lowest = levels.iter().map(|l| *l.iter().min().unwrap()).max().unwrap();
    if lowest > radius || r >= radius {
        return Err(Error::domain(format!("columns share no usable radius above r = {r}")));
    }
    let rays = columns
        .iter()
        .zip(&levels)
        .map(|(col, lv)| {
            let end = lv.iter().position(|&d| d == radius).unwrap();
            let start = lv[..end].iter().rposition(|&d| d > radius).map_or(0, |s| s + 1);
            Ray::frontier(col[start..=end].to_vec())
        })
        .collect();
    let witness = EndWitness { root, rays, radius, equivalence_radius: r };
    let g = LazyGraph::Finite(host.clone());
    witness.validate(&g).map_err(Error::Domain)?;
    Ok(witness)
}
