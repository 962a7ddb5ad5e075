mod oracles;

use std::collections::BTreeSet;

use halin_core::disjoint_paths::{max_vertex_disjoint_paths, min_vertex_separator, pairwise_disjoint};
use halin_core::VertexId;
use oracles::{brute_force_separator_size, connected_avoiding, random_graph, random_subset, rng};
use proptest::prelude::*;
use rand::RngExt;

struct Instance {
    g: halin_core::FiniteGraph,
    a: BTreeSet<VertexId>,
    b: BTreeSet<VertexId>,
    forbidden: BTreeSet<VertexId>,
}

fn instance(seed: u64, n: u64) -> Instance {
    let mut r = rng(seed);
    let density = r.random_range(0.1..0.6);
    let g = random_graph(&mut r, n, density);
    let a = random_subset(&mut r, n, 0.25);
    let b = random_subset(&mut r, n, 0.25);
    let forbidden = (0..n)
        .map(oracles::v)
        .filter(|x| !a.contains(x) && !b.contains(x) && r.random_bool(0.15))
        .collect();
    Instance { g, a, b, forbidden }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn flow_value_equals_brute_force_separator(seed in any::<u64>(), n in 1u64..=12) {
        let t = instance(seed, n);
        let paths = max_vertex_disjoint_paths(&t.g, &t.a, &t.b, &t.forbidden).unwrap();
        prop_assert_eq!(paths.len(), brute_force_separator_size(&t.g, &t.a, &t.b, &t.forbidden));

        prop_assert!(pairwise_disjoint(&paths));
        for p in &paths {
            prop_assert!(p.is_path_in(&t.g));
            prop_assert!(t.a.contains(&p.first()) && t.b.contains(&p.last()));
            prop_assert!(p.iter().all(|x| !t.forbidden.contains(x)));
            prop_assert!(p[..p.len() - 1].iter().all(|x| !t.b.contains(x)));
            prop_assert!(p[1..].iter().all(|x| !t.a.contains(x)));
        }

        let sep = min_vertex_separator(&t.g, &t.a, &t.b, &t.forbidden).unwrap();
        prop_assert_eq!(sep.len(), paths.len());
        let mut removed = t.forbidden.clone();
        removed.extend(sep.iter().copied());
        prop_assert!(!connected_avoiding(&t.g, &t.a, &t.b, &removed));
    }

    #[test]
    fn more_forbidden_never_means_more_paths(seed in any::<u64>(), n in 2u64..=12, extra in any::<u64>()) {
        let t = instance(seed, n);
        let before = max_vertex_disjoint_paths(&t.g, &t.a, &t.b, &t.forbidden).unwrap().len();
        let mut forbidden = t.forbidden.clone();
        let x = VertexId(extra % n);
        if !t.a.contains(&x) && !t.b.contains(&x) {
            forbidden.insert(x);
        }
        let after = max_vertex_disjoint_paths(&t.g, &t.a, &t.b, &forbidden).unwrap();
        prop_assert!(after.len() <= before);
        prop_assert!(after.iter().flat_map(|p| p.iter()).all(|x| !forbidden.contains(x)));
    }
}
