use std::collections::BTreeSet;

use halin_core::disjoint_paths::{Path, PathFamily};
use halin_core::extract::{
    c_segments, comb_construct, halin_pipeline, lemma_construct, ray_adjacency_in, witness_from_embedding, Built,
    PipelineParams, Stage,
};
use halin_core::rays::Ray;
use halin_core::verify::{verify_embedding, Embedding};
use halin_core::{ball, hex_prefix, FiniteGraph, HexPrefixSpec, LazyGraph, VertexId};

fn v(x: u64) -> VertexId {
    VertexId(x)
}

fn line(base: u64, len: u64) -> Ray {
    Ray::new((0..len).map(|x| v(base + x)).collect())
}

fn add_path(g: &mut FiniteGraph, ray: &Ray) {
    for w in ray.vertices.windows(2) {
        g.insert_edge(w[0], w[1]);
    }
}

/// Rays `C`, `L_0`, `L_1` of length 40; connectors are single edges
/// `L_j[3m]`–`C[pos(j, m)]` for `m < 6`.
fn ladder_host(pos: impl Fn(usize, u64) -> u64) -> (FiniteGraph, Ray, Vec<Ray>, Vec<PathFamily>) {
    let c = line(1000, 40);
    let l = vec![line(2000, 40), line(3000, 40)];
    let mut g = FiniteGraph::new();
    for ray in std::iter::once(&c).chain(&l) {
        add_path(&mut g, ray);
    }
    let families = (0..2)
        .map(|j| {
            PathFamily::new(
                (0..6)
                    .map(|m| {
                        let (a, b) = (l[j].vertices[3 * m as usize], c.vertices[pos(j, m) as usize]);
                        g.insert_edge(a, b);
                        Path(vec![a, b])
                    })
                    .collect(),
            )
        })
        .collect();
    (g, c, l, families)
}

#[test]
fn lemma_on_interleaved_connectors() {
    let (g, c, l, families) = ladder_host(|j, m| 4 * m + 2 * j as u64);
    let spec = HexPrefixSpec::new(2, 6).unwrap();
    let out = lemma_construct(&g, &c, &l, &families, spec).unwrap().success().expect("enough connectors");
    assert_eq!(verify_embedding(&g, &out.embedding), vec![]);
    // the base path is the connector reaching C first
    assert_eq!(out.trace.base, Path(vec![v(2000), v(1000)]));
    assert_eq!(out.trace.c0, 0);
    assert_eq!(out.trace.c_segments, vec![(0, 2), (4, 6), (8, 10)]);
    assert_eq!(c_segments(&out.embedding, &c), out.trace.c_segments);
}

#[test]
fn lemma_needs_attachments_beyond_the_base() {
    // every L_1 connector lands on C below the first L_0 connector
    let (g, c, l, families) = ladder_host(|j, m| if j == 0 { 20 + 2 * m } else { m });
    let spec = HexPrefixSpec::new(2, 6).unwrap();
    match lemma_construct(&g, &c, &l, &families, spec).unwrap() {
        Built::Insufficient { stage, .. } => assert_eq!(stage, Stage::Rung { col: 0, row: 0 }),
        other => panic!("{other:?}"),
    }
}

#[test]
fn lemma_single_column_is_bare() {
    let (g, c, l, families) = ladder_host(|j, m| 4 * m + 2 * j as u64);
    let out = lemma_construct(&g, &c, &l, &families, HexPrefixSpec::new(1, 5).unwrap()).unwrap().success().unwrap();
    assert_eq!(out.embedding.branch.values().copied().collect::<Vec<_>>(), l[0].vertices[..5].to_vec());
    assert_eq!(out.trace.base, families[0].paths[0]);
}

#[test]
fn lemma_rejects_intersecting_rays() {
    let (g, c, _, families) = ladder_host(|j, m| 4 * m + 2 * j as u64);
    let l = vec![c.clone(), line(3000, 40)];
    assert!(lemma_construct(&g, &c, &l, &families, HexPrefixSpec::new(2, 4).unwrap()).is_err());
}

fn column(spec: HexPrefixSpec, i: u32) -> Ray {
    Ray::new((0..spec.depth).map(|j| HexPrefixSpec::vertex_id((i, j))).collect())
}

fn rungs(spec: HexPrefixSpec, i: u32) -> PathFamily {
    PathFamily::new(
        (0..spec.depth)
            .filter(|&j| spec.has_right_rung((i, j)))
            .map(|j| Path(vec![HexPrefixSpec::vertex_id((i, j)), HexPrefixSpec::vertex_id((i + 1, j))]))
            .collect(),
    )
}

fn identity(spec: HexPrefixSpec) -> Embedding {
    Embedding {
        pattern: spec,
        branch: spec.vertices().map(|p| (p, HexPrefixSpec::vertex_id(p))).collect(),
        edge_paths: spec
            .edges()
            .into_iter()
            .map(|(a, b)| ((a, b), Path(vec![HexPrefixSpec::vertex_id(a), HexPrefixSpec::vertex_id(b)])))
            .collect(),
    }
}

#[test]
fn comb_on_a_grid_prefix_is_the_identity() {
    let big = HexPrefixSpec::new(4, 24).unwrap();
    let host = hex_prefix(big);
    let chain: Vec<Ray> = (0..4).map(|i| column(big, i)).collect();
    let families: Vec<PathFamily> = (0..3).map(|i| rungs(big, i)).collect();
    let spec = HexPrefixSpec::new(4, 8).unwrap();
    let emb = comb_construct(&host, &chain, &families, spec).unwrap().success().unwrap();
    assert_eq!(emb, identity(spec));
}

#[test]
fn comb_errors_and_exhaustion() {
    let big = HexPrefixSpec::new(4, 24).unwrap();
    let host = hex_prefix(big);
    let chain: Vec<Ray> = (0..4).map(|i| column(big, i)).collect();
    let mut families: Vec<PathFamily> = (0..3).map(|i| rungs(big, i)).collect();
    assert!(comb_construct(&host, &chain[..3], &families, HexPrefixSpec::new(4, 8).unwrap()).is_err());
    families[1] = PathFamily::new(Vec::new());
    match comb_construct(&host, &chain, &families, HexPrefixSpec::new(4, 8).unwrap()).unwrap() {
        Built::Insufficient { stage: Stage::Rung { col, .. }, .. } => assert_eq!(col, 1),
        other => panic!("{other:?}"),
    }
}

/// Column `i` of the hex quarter grid from its bottom up to distance `radius`.
fn hex_column(g: &LazyGraph, host: &FiniteGraph, i: u64, radius: u64) -> Ray {
    let dist = host.distances(g.origin());
    let mut vs = Vec::new();
    for j in 0.. {
        let x = g.vertex(i, j).unwrap();
        vs.push(x);
        if dist[&x] == radius {
            break;
        }
    }
    Ray::frontier(vs)
}

#[test]
fn hex_columns_form_a_path_of_rays() {
    let g = LazyGraph::HexQuarterGrid;
    let host = ball(&g, g.origin(), 16).unwrap();
    let rays: Vec<Ray> = (0..3).map(|i| hex_column(&g, &host, i, 16)).collect();
    let f = ray_adjacency_in(&host, &rays, 3).unwrap();
    assert_eq!(f.edges.keys().copied().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    for (&(i, j), fam) in &f.edges {
        fam.check(&host, &f.rays[i], &f.rays[j]).unwrap();
    }
    let two = ray_adjacency_in(&host, &rays[..2], 1).unwrap();
    assert_eq!(two.edges.len(), 1);
}

#[test]
fn paths_through_an_earlier_ray_are_rerouted() {
    // R_1 on top, R_0 in the middle, R_2 at the bottom; rungs only cross in columns
    let rays = vec![line(0, 12), line(100, 12), line(200, 12)];
    let mut g = FiniteGraph::new();
    for r in &rays {
        add_path(&mut g, r);
    }
    for m in 0..12 {
        g.insert_edge(v(100 + m), v(m));
        g.insert_edge(v(m), v(200 + m));
    }
    let f = ray_adjacency_in(&g, &rays, 4).unwrap();
    assert_eq!(f.edges.keys().copied().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    let rerouted = &f.edges[&(0, 2)];
    assert!(rerouted.len() >= 4);
    let on_r0 = rays[0].vertex_set();
    assert!(rerouted.paths.iter().all(|p| on_r0.contains(&p.first())));
    assert!(f.log.iter().any(|l| l.contains("rerouted")));
}

#[test]
fn families_avoid_every_ray_after_rerouting() {
    for (g, k, radius) in [(LazyGraph::HexQuarterGrid, 5, 64), (LazyGraph::Grid2d, 4, 48)] {
        let w = match halin_core::rays::thick_end_witness(&g, g.origin(), k, 4, radius).unwrap() {
            halin_core::rays::WitnessSearch::Found(w) => w,
            other => panic!("{other:?}"),
        };
        let host = ball(&g, g.origin(), radius).unwrap();
        let f = ray_adjacency_in(&host, &w.rays, 4).unwrap();
        let on_rays: BTreeSet<VertexId> = f.rays.iter().flat_map(|r| r.vertices.iter().copied()).collect();
        for (&(i, j), fam) in &f.edges {
            fam.check(&host, &f.rays[i], &f.rays[j]).unwrap();
            assert!(fam.paths.iter().all(|p| p.interior().iter().all(|x| !on_rays.contains(x))));
        }
    }
}

#[test]
fn identity_columns_read_back_as_rays() {
    let spec = HexPrefixSpec::new(4, 16).unwrap();
    let host = hex_prefix(spec);
    let w = witness_from_embedding(&host, v(0), &identity(spec), 4, 2).unwrap();
    assert_eq!(w.rays.len(), 4);
    for (i, ray) in w.rays.iter().enumerate() {
        let col = column(spec, i as u32);
        assert!(ray.vertices.iter().all(|x| col.vertices.contains(x)));
        assert_eq!(*ray.vertices.last().unwrap(), col.vertices[ray.len() - 1]);
    }
    assert!(witness_from_embedding(&host, v(0), &identity(spec), 5, 2).is_err());
}

#[test]
fn smaller_specs_still_succeed() {
    let g = LazyGraph::HexQuarterGrid;
    let run = |cols, depth| {
        let p = PipelineParams {
            root: g.origin(),
            k: 5,
            r: 4,
            radius: 64,
            t: 8,
            spec: HexPrefixSpec::new(cols, depth).unwrap(),
        };
        matches!(halin_pipeline(&g, p).unwrap().outcome, Built::Success(_))
    };
    for (cols, depth) in [(4, 16), (4, 12), (3, 16), (3, 9), (2, 16), (2, 5), (1, 16), (4, 15), (3, 15)] {
        assert!(run(cols, depth), "({cols},{depth})");
        if cols > 1 {
            assert!(run(cols - 1, depth), "({},{depth})", cols - 1);
        }
        if depth > 1 {
            assert!(run(cols, depth - 1), "({cols},{})", depth - 1);
        }
    }
}

/// A central ray `C` with four side rays, each joined only to `C`: side ray
/// `j` meets `C` at every position `m` with `m % 4 == j`.
fn spider_of_rays(len: u64) -> FiniteGraph {
    let mut g = FiniteGraph::new();
    let c = line(1000, len);
    add_path(&mut g, &c);
    g.insert_edge(v(0), c.vertices[0]);
    for j in 0..4 {
        let l = line(2000 + 1000 * j, len);
        add_path(&mut g, &l);
        g.insert_edge(v(0), l.vertices[0]);
        for m in (j..len).step_by(4) {
            g.insert_edge(l.vertices[m as usize], c.vertices[m as usize]);
        }
    }
    g
}

#[test]
fn star_case_goes_through_the_center_ray() {
    let g = LazyGraph::Finite(spider_of_rays(160));
    let p = PipelineParams { root: v(0), k: 5, r: 2, radius: 150, t: 8, spec: HexPrefixSpec::new(4, 8).unwrap() };
    let report = halin_pipeline(&g, p).unwrap();
    for line in &report.log {
        eprintln!("{line}");
    }
    assert_eq!(report.case_taken, Some(halin_core::extract::Case::Star));
    let Built::Success(emb) = &report.outcome else { panic!("{:?}", report.outcome) };
    let host = ball(&g, v(0), 150).unwrap();
    assert_eq!(verify_embedding(&host, emb), vec![]);
}
