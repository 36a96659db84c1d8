use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use seppath::canon::enumerate_trees;
use seppath::edge_systems::{apply_reduction, edge_system, find_reduction_pair, planar_construction};
use seppath::fault::{decode, signature_table, Diagnosis, ProbeReport};
use seppath::oracle::{family_of_size, min_separating, OracleOptions};
use seppath::random_graphs::{gen_gnp, isolated_count, random_vertex_system, Graph};
use seppath::vertex_systems::{
    c13_trees, is_c13, sliding_windows, vertex_system, vertex_system_supported,
};
use seppath::{contract_bare_paths, kisses, profile, Edge, Element, PathSystem, Separation, TargetSet, Tree, VertexPath};

fn tree(n: usize, seed: u64) -> Tree {
    Tree::random(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// Random tree with every degree-2 vertex given an extra leaf.
fn tree_without_deg2(n: usize, seed: u64) -> Tree {
    let t = tree(n, seed);
    let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.lo(), e.hi())).collect();
    let mut next = n;
    for v in 0..n {
        if t.degree(v) == 2 {
            edges.push((v, next));
            next += 1;
        }
    }
    Tree::from_edges(next, &edges).unwrap()
}

/// Random tree with at least three leaves at every vertex that has one,
/// then some edges subdivided.
fn padded_tree(n: usize, seed: u64, subdivisions: usize) -> Tree {
    let t = tree(n, seed);
    let mut edges: Vec<(usize, usize)> = t.edges().iter().map(|e| (e.lo(), e.hi())).collect();
    let mut next = n;
    for v in 0..n {
        let leaves = t.neighbors(v).iter().filter(|&&w| t.is_leaf(w)).count();
        if !t.is_leaf(v) && leaves > 0 {
            for _ in leaves..3 {
                edges.push((v, next));
                next += 1;
            }
        }
    }
    for i in 0..subdivisions {
        let (a, b) = edges.swap_remove((seed as usize).wrapping_add(7 * i) % edges.len());
        edges.push((a, next));
        edges.push((next, b));
        next += 1;
    }
    Tree::from_edges(next, &edges).unwrap()
}

fn opts() -> OracleOptions {
    OracleOptions::default()
}

fn endpoints(fs: &PathSystem<'_>) -> HashSet<usize> {
    fs.paths().iter().flat_map(|p| [p.first(), p.last()]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bare_paths_partition_the_edges(n in 2usize..40, seed: u64) {
        let t = tree(n, seed);
        let p = profile(&t);
        let mut seen = HashSet::new();
        for b in &p.bare_paths {
            for e in b.edges() {
                prop_assert!(seen.insert(e));
            }
        }
        prop_assert_eq!(seen.len(), n - 1);
        prop_assert_eq!(p.h2star, p.h2 - p.set_i.len());
        prop_assert_eq!(p.h2star, p.h2star_by_sum());
    }

    #[test]
    fn contraction_round_trip(n in 2usize..40, seed: u64) {
        let t = tree(n, seed);
        let c = contract_bare_paths(&t);
        prop_assert_eq!(profile(&c.tree).h2, 0);
        let mut edges: Vec<Edge> = c.edge_paths.iter().flat_map(|p| p.edges().collect::<Vec<_>>()).collect();
        edges.sort();
        prop_assert_eq!(edges, t.edges().to_vec());
    }

    #[test]
    fn unique_path_reversal(n in 2usize..40, seed: u64, a: usize, b: usize) {
        let t = tree(n, seed);
        let (u, v) = (a % n, b % n);
        prop_assert_eq!(t.unique_path(u, v).unwrap().reversed(), t.unique_path(v, u).unwrap());
    }

    #[test]
    fn dfs_leaf_order_visits_every_leaf_once(n in 2usize..40, seed: u64) {
        let t = tree(n, seed);
        let leaves = t.leaves();
        for &s in &leaves {
            let mut order = t.dfs_leaf_order(s).unwrap();
            prop_assert_eq!(order[0], s);
            order.sort();
            prop_assert_eq!(&order, &leaves);
        }
    }

    #[test]
    fn text_round_trip(n in 2usize..30, seed: u64, pairs in prop::collection::vec((0usize..30, 0usize..30), 0..8)) {
        let t = tree(n, seed);
        let back = Tree::parse(&t.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), t.to_text());
        let paths = pairs.iter().map(|&(a, b)| t.unique_path(a % n, b % n).unwrap()).collect();
        let fs = PathSystem::new(&t, paths).unwrap();
        let again = PathSystem::parse(&t, &fs.to_text()).unwrap();
        prop_assert_eq!(again.paths(), fs.paths());
    }

    #[test]
    fn verdicts_match_signature_table(n in 2usize..14, seed: u64, pairs in prop::collection::vec((0usize..14, 0usize..14), 0..8)) {
        let t = tree(n, seed);
        let paths = pairs.iter().map(|&(a, b)| t.unique_path(a % n, b % n).unwrap()).collect();
        let fs = PathSystem::new(&t, paths).unwrap();
        for ts in [TargetSet::edges(&t), TargetSet::vertices(&t), TargetSet::vertices_and_interior_edges(&t)] {
            let sigs = fs.signatures(&ts);
            let distinct = sigs.iter().collect::<HashSet<_>>().len() == sigs.len();
            prop_assert_eq!(fs.separates(&ts) == Separation::Separates, distinct);
            let covered = sigs.iter().all(|s| !s.is_empty());
            prop_assert_eq!(fs.covers(&ts) == seppath::Covering::Covers, covered);
        }
    }

    #[test]
    fn adding_a_path_keeps_separated_pairs(n in 2usize..14, seed: u64, pairs in prop::collection::vec((0usize..14, 0usize..14), 1..8)) {
        let t = tree(n, seed);
        let mut paths: Vec<VertexPath> = pairs.iter().map(|&(a, b)| t.unique_path(a % n, b % n).unwrap()).collect();
        let extra = paths.pop().unwrap();
        let ts = TargetSet::vertices(&t);
        let before = PathSystem::new(&t, paths.clone()).unwrap().signatures(&ts);
        paths.push(extra);
        let after = PathSystem::new(&t, paths).unwrap().signatures(&ts);
        for i in 0..ts.len() {
            for j in i + 1..ts.len() {
                if before[i] != before[j] {
                    prop_assert_ne!(&after[i], &after[j]);
                }
            }
        }
    }

    #[test]
    fn edge_systems_end_at_every_leaf_and_degree2_vertex(n in 2usize..30, seed: u64) {
        let t = tree(n, seed);
        let fs = edge_system(&t).unwrap();
        let ends = endpoints(&fs);
        let p = profile(&t);
        for v in p.leaves.iter().chain(&p.deg2) {
            prop_assert!(ends.contains(v), "vertex {} is no endpoint", v);
        }
    }

    #[test]
    fn leaf_sides_are_cyclic_intervals(n in 3usize..25, seed: u64) {
        let t = tree_without_deg2(n, seed);
        let order = t.dfs_leaf_order(t.leaves()[0]).unwrap();
        let k = order.len();
        for e in t.edges() {
            // Leaves on the `lo` side of `e`.
            let side: Vec<bool> = order
                .iter()
                .map(|&l| !t.unique_path(l, e.lo()).unwrap().contains_vertex(e.hi()))
                .collect();
            // A cyclic interval has at most two boundaries.
            let changes = (0..k).filter(|&i| side[i] != side[(i + 1) % k]).count();
            prop_assert!(changes <= 2, "edge {:?}: {:?}", e, side);
        }
    }

    #[test]
    fn planar_double_cover(n in 3usize..25, seed: u64) {
        let t = tree_without_deg2(n, seed);
        prop_assume!(t.leaves().len() >= 3);
        let fs = planar_construction(&t).unwrap();
        for e in t.edges() {
            prop_assert_eq!(fs.incidence(Element::from(*e)).unwrap().len(), 2);
        }
        for v in 0..t.vertex_count() {
            let want = if t.is_leaf(v) { 2 } else { t.degree(v) };
            prop_assert_eq!(fs.incidence(Element::Vertex(v)).unwrap().len(), want);
        }
    }

    #[test]
    fn vertex_systems_kiss_every_edge(n in 3usize..20, seed: u64, subdivisions in 0usize..12) {
        let t = padded_tree(n, seed, subdivisions);
        prop_assume!(vertex_system_supported(&t));
        let fs = vertex_system(&t).unwrap();
        for &e in t.edges() {
            prop_assert!(fs.paths().iter().any(|p| kisses(p, e)));
        }
    }

    #[test]
    fn windows_are_distinct_intervals(k in 1usize..=64) {
        let ws = sliding_windows(k);
        prop_assert_eq!(ws.len(), (k + 1).div_ceil(2));
        let sigs: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..ws.len()).filter(|&j| ws[j].0 <= i && i < ws[j].0 + ws[j].1).collect())
            .collect();
        prop_assert!(sigs.iter().all(|s| !s.is_empty()));
        prop_assert_eq!(sigs.iter().collect::<BTreeSet<_>>().len(), k);
        for s in &sigs {
            prop_assert!(s.windows(2).all(|w| w[1] == w[0] + 1));
        }
    }

    #[test]
    fn decode_only_identifies_literal_signatures(n in 3usize..12, seed: u64, report in prop::collection::vec(any::<bool>(), 0..12)) {
        let t = tree(n, seed);
        let fs = edge_system(&t).unwrap();
        let ts = TargetSet::edges(&t);
        let table = signature_table(&fs, &ts).unwrap();
        let mut outcomes = report;
        outcomes.resize(fs.len(), true);
        let r = ProbeReport { outcomes };
        if let Diagnosis::Identified(s) = decode(&table, &r).unwrap() {
            prop_assert_eq!(table.get(&s).unwrap().indices(), &r.failed()[..]);
        }
    }

    #[test]
    fn gnp_is_deterministic(n in 1usize..60, p in 0.0f64..=1.0, seed: u64) {
        prop_assert_eq!(gen_gnp(n, p, seed), gen_gnp(n, p, seed));
    }

    #[test]
    fn random_vertex_systems_verify(n in 2usize..40, p in 0.3f64..=1.0, seed: u64) {
        let g = gen_gnp(n, p, seed);
        if let Some(fs) = random_vertex_system(&g, seed) {
            prop_assert!(fs.check(&TargetSet::vertices(&g), true).is_ok());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn isolated_vertices_bound_the_optimum(n in 2usize..=7, p in 0.0f64..0.6, seed: u64) {
        let g: Graph = gen_gnp(n, p, seed);
        let r = min_separating(&g, &TargetSet::vertices(&g), true, &opts()).unwrap();
        prop_assert!(isolated_count(&g) <= r.size);
        prop_assert!(r.system.check(&TargetSet::vertices(&g), true).is_ok());
    }

    #[test]
    fn reduction_lifts_optimal_systems(n in 4usize..=8, seed: u64) {
        let t = tree(n, seed);
        let rp = find_reduction_pair(&t, false);
        prop_assume!(rp.is_some());
        let (reduced, lift) = apply_reduction(&t, rp.unwrap()).unwrap();
        let r = min_separating(&reduced, &TargetSet::edges(&reduced), true, &opts()).unwrap();
        let lifted = lift.apply(r.system.paths());
        let fs = PathSystem::new(&t, lifted).unwrap();
        prop_assert_eq!(fs.len(), r.size + 1);
        prop_assert!(fs.check(&TargetSet::edges(&t), true).is_ok());
    }
}

#[test]
fn oracle_vertex_systems_satisfy_the_kissing_lemmas() {
    for n in 2..=9 {
        for t in enumerate_trees(n).unwrap() {
            let r = min_separating(&t, &TargetSet::vertices(&t), true, &opts()).unwrap();
            let ends = endpoints(&r.system);
            for &e in t.edges() {
                assert!(r.system.paths().iter().any(|p| kisses(p, e)), "{:?}", t.edges());
                if t.degree(e.lo()) == 2 && t.degree(e.hi()) == 2 {
                    assert!(ends.contains(&e.lo()) || ends.contains(&e.hi()));
                }
            }
        }
    }
}

#[test]
fn oracle_orderings() {
    for n in 2..=7 {
        for t in enumerate_trees(n).unwrap() {
            for ts in [TargetSet::edges(&t), TargetSet::vertices(&t), TargetSet::vertices_and_interior_edges(&t)] {
                let cover = min_separating(&t, &ts, true, &opts()).unwrap().size;
                let bare = min_separating(&t, &ts, false, &opts()).unwrap().size;
                assert!(bare <= cover);
                let with = OracleOptions { include_trivial: Some(true), ..opts() };
                let without = OracleOptions { include_trivial: Some(false), ..opts() };
                let a = min_separating(&t, &ts, true, &with).unwrap().size;
                // Without length-0 paths some vertex sets cannot be separated at all.
                let b = min_separating(&t, &ts, true, &without).map_or(usize::MAX, |r| r.size);
                assert!(a <= b);
                assert!(family_of_size(&t, &ts, true, cover - 1, &opts()).unwrap().is_none());
            }
        }
    }
}

#[test]
fn c13_recognizer_matches_generator() {
    let generated = c13_trees(13);
    assert!(generated.iter().all(is_c13));
    for n in 4..=10 {
        let recognized = enumerate_trees(n).unwrap().into_iter().filter(is_c13).count();
        let built = generated.iter().filter(|t| t.vertex_count() == n).count();
        assert_eq!(recognized, built, "n = {}", n);
    }
}
