use std::collections::{BTreeMap, BTreeSet};

use diagtoric::algebra::{buchberger, canonical_set, initial_ideal, is_member, toric_gb, OrderKind, TermOrder};
use diagtoric::bases::{as_set, circuits, graver, ugb, BasisStatus};
use diagtoric::constructions::{build_h, prism, verify_pg_equals_ih};
use diagtoric::encoding::{build_ag, generators_pg, incidence_config, is_homogeneous};
use diagtoric::fixtures;
use diagtoric::graph::{classify, enumerate_cycles, ComponentKind, Graph, Parity};
use proptest::prelude::*;

/// Simple graphs on at most six vertices with at most seven edges.
fn small_graph() -> impl Strategy<Value = Graph> {
    prop::collection::btree_set((1u32..=6, 1u32..=6), 1..=7).prop_filter_map("needs an edge", |pairs| {
        let edges: BTreeSet<(u32, u32)> = pairs
            .into_iter()
            .filter(|(a, b)| a != b)
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if edges.is_empty() {
            None
        } else {
            Graph::from_edges(edges).ok()
        }
    })
}

fn connected_graph() -> impl Strategy<Value = Graph> {
    small_graph().prop_filter("connected", Graph::is_connected)
}

fn relabel(g: &Graph, map: &BTreeMap<u32, u32>) -> Graph {
    Graph::new(g.vertices().iter().map(|v| map[v]), g.edges().iter().map(|e| (map[&e.lo()], map[&e.hi()]))).unwrap()
}

fn natural(g: &Graph, kind: OrderKind) -> TermOrder {
    TermOrder::natural(kind, build_ag(g).variables())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn component_kind_matches_counts(g in small_graph()) {
        for (comp, info) in g.components().iter().zip(classify(&g).components) {
            let (n, m) = (comp.vertex_count(), comp.edge_count());
            prop_assert_eq!(info.kind == ComponentKind::Tree, m + 1 == n);
            prop_assert_eq!(info.kind.is_unicyclic(), m == n);
            prop_assert_eq!(info.bipartite, comp.is_bipartite());
        }
    }

    #[test]
    fn generators_are_homogeneous(g in small_graph()) {
        let cfg = build_ag(&g);
        for f in generators_pg(&g) {
            prop_assert!(is_homogeneous(&f, &cfg).unwrap());
        }
        for c in circuits(&cfg) {
            prop_assert!(is_homogeneous(&c, &cfg).unwrap());
        }
    }

    #[test]
    fn default_basis_is_the_generators(g in small_graph()) {
        let order = natural(&g, OrderKind::DegRevLex);
        let gens = generators_pg(&g);
        let gb = buchberger(&gens, &order).unwrap();
        prop_assert_eq!(canonical_set(&gb), canonical_set(&gens));
        let again = buchberger(&gb, &order).unwrap();
        prop_assert_eq!(gb, again);
    }

    #[test]
    fn toric_and_generator_bases_agree(g in connected_graph(), seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let order = TermOrder::random(OrderKind::DegRevLex, build_ag(&g).variables(), &mut rng);
        let from_gens = buchberger(&generators_pg(&g), &order).unwrap();
        let toric = toric_gb(&build_ag(&g), &order).unwrap();
        for b in &toric {
            prop_assert!(is_member(b, &from_gens, &order).unwrap());
        }
        for b in &from_gens {
            prop_assert!(is_member(b, &toric, &order).unwrap());
        }
        prop_assert_eq!(canonical_set(&toric), canonical_set(&from_gens));
    }

    #[test]
    fn bipartite_initial_ideals_are_squarefree(g in small_graph().prop_filter("bipartite", Graph::is_bipartite), seed in 0u64..1000) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let order = TermOrder::random(OrderKind::Lex, build_ag(&g).variables(), &mut rng);
        let gb = buchberger(&generators_pg(&g), &order).unwrap();
        prop_assert!(initial_ideal(&gb, &order).unwrap().squarefree);
    }

    #[test]
    fn circuits_lie_in_graver(g in connected_graph().prop_filter("small", |g| g.edge_count() <= 5)) {
        let cfg = build_ag(&g);
        let c = as_set(&circuits(&cfg));
        let gr = as_set(&graver(&cfg));
        prop_assert!(c.is_subset(&gr));
        if g.is_bipartite() {
            prop_assert_eq!(&c, &gr);
            for b in &c {
                prop_assert!(b.plus().is_squarefree() && b.minus().is_squarefree());
            }
        }
    }

    #[test]
    fn universal_basis_contains_generators(g in small_graph().prop_filter("small", |g| g.edge_count() <= 5)) {
        let report = ugb(&g).unwrap();
        let set = as_set(&report.elements);
        let order = natural(&g, OrderKind::DegRevLex);
        let gb = buchberger(&generators_pg(&g), &order).unwrap();
        for f in generators_pg(&g) {
            prop_assert!(set.contains(&f.canonical()));
        }
        for b in &report.elements {
            prop_assert!(is_member(b, &gb, &order).unwrap());
        }
        if report.status == BasisStatus::Sandwich {
            let lower = as_set(report.lower.as_ref().unwrap());
            let upper = as_set(report.upper.as_ref().unwrap());
            prop_assert!(lower.is_subset(&upper));
        }
    }

    #[test]
    fn relabelling_preserves_basis_sizes(g in connected_graph().prop_filter("small", |g| g.edge_count() <= 5), shift in 1u32..5) {
        let vs: Vec<u32> = g.vertices().iter().copied().collect();
        let map: BTreeMap<u32, u32> = vs.iter().zip(vs.iter().rev()).map(|(a, b)| (*a, *b + shift)).collect();
        let h = relabel(&g, &map);
        let (a, b) = (ugb(&g).unwrap(), ugb(&h).unwrap());
        prop_assert_eq!(a.count, b.count);
        prop_assert_eq!(a.max_degree, b.max_degree);
        prop_assert_eq!(a.status, b.status);
    }

    #[test]
    fn prism_sizes(g in connected_graph()) {
        let p = prism(&g).unwrap();
        let (k, l) = (g.vertex_count(), g.edge_count());
        prop_assert_eq!(p.graph.vertex_count(), 2 * k);
        prop_assert_eq!(p.graph.edge_count(), k + 2 * l);
    }

    #[test]
    fn witness_exists_iff_at_most_one_cycle(g in connected_graph()) {
        let class = classify(&g);
        match build_h(&g) {
            Ok(h) => {
                prop_assert!(class.admits_witness());
                let r = verify_pg_equals_ih(&g, &h).unwrap();
                prop_assert!(r.equal);
            }
            Err(_) => prop_assert!(!class.admits_witness()),
        }
    }
}

#[test]
fn path_prism_even_cycles() {
    for n in 2..=7u32 {
        let p = prism(&fixtures::path(n)).unwrap();
        let count = enumerate_cycles(&p.graph, Parity::Even).len();
        assert_eq!(count as u32, n * (n - 1) / 2, "path{n}");
        assert_eq!(enumerate_cycles(&p.graph, Parity::Odd).len(), 0);
    }
}

#[test]
fn star_counts_follow_leaf_pairs() {
    // n - 1 four-cycles and one six-cycle per pair of leaves
    for n in 3..=8u32 {
        let r = ugb(&fixtures::star(n)).unwrap();
        assert_eq!(r.count as u32, (n - 1) + (n - 1) * (n - 2) / 2, "star{n}");
        assert_eq!(r.max_degree, 3);
    }
}

#[test]
fn bipartite_unicyclic_witness_basis() {
    for g in [fixtures::cycle(4), fixtures::cycle(6), fixtures::cycle4_with_pendants()] {
        let h = build_h(&g).unwrap();
        let cfg = incidence_config(&h.graph);
        assert_eq!(as_set(&circuits(&cfg)), as_set(&circuits(&build_ag(&g))));
    }
}
