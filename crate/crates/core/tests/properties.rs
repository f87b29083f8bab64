use std::collections::BTreeMap;

use num_rational::Rational64;
use proptest::prelude::*;

use defcolor::colorer::{color, ColorOutcome};
use defcolor::coloring::{is_valid, solve_exact};
use defcolor::discharge::{apply_rules_with, classify_faces, Element, FaceClass, DEFAULT_T};
use defcolor::generate::{gen_planar_girth5_with, GenParams};
use defcolor::io::{parse_coloring, parse_graph, serialize_coloring, serialize_graph};
use defcolor::{Adjacency, DefectVector, EmbeddedGraph, Neighbor};

fn params() -> impl Strategy<Value = GenParams> {
    prop_oneof![Just(GenParams::default()), Just(GenParams::structured())]
}

fn graph(max: usize) -> impl Strategy<Value = EmbeddedGraph> {
    (any::<u64>(), 5..max, params()).prop_map(|(seed, n, p)| gen_planar_girth5_with(seed, n, &p))
}

/// Every rotation reversed: the same surface seen from the other side.
fn mirror(g: &EmbeddedGraph) -> EmbeddedGraph {
    let spec: Vec<Vec<Neighbor>> = g
        .rotations()
        .iter()
        .map(|r| r.iter().rev().copied().collect())
        .collect();
    EmbeddedGraph::new(spec).unwrap()
}

fn class_counts(g: &EmbeddedGraph, t: usize) -> BTreeMap<FaceClass, usize> {
    let c = classify_faces(g, t);
    let mut out = BTreeMap::new();
    for f in 0..g.face_count() {
        *out.entry(c.class(f)).or_default() += 1;
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_text_round_trips(g in graph(120)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(back.rotations(), g.rotations());
        prop_assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn charge_is_conserved_per_element(g in graph(150)) {
        let d = apply_rules_with(&g, DEFAULT_T);
        let expected = Rational64::from(6 * g.euler_genus() as i64 - 12);
        prop_assert_eq!(d.ledger.total_initial(), expected);
        prop_assert_eq!(d.ledger.total_final(), expected);
        let mut net: BTreeMap<Element, Rational64> = BTreeMap::new();
        for tr in &d.transfers {
            prop_assert!(tr.amount > Rational64::from(0));
            *net.entry(tr.source).or_default() -= tr.amount;
            *net.entry(tr.target).or_default() += tr.amount;
        }
        for (e, initial, fin) in d.ledger.rows() {
            prop_assert_eq!(fin, initial + net.get(&e).copied().unwrap_or_default());
        }
    }

    #[test]
    fn mirrored_embeddings_agree(g in graph(100)) {
        let m = mirror(&g);
        prop_assert_eq!(m.face_count(), g.face_count());
        prop_assert_eq!(class_counts(&m, DEFAULT_T), class_counts(&g, DEFAULT_T));
        let (a, b) = (apply_rules_with(&g, DEFAULT_T), apply_rules_with(&m, DEFAULT_T));
        prop_assert_eq!(a.ledger.vertex_final, b.ledger.vertex_final);
    }

    #[test]
    fn colorer_is_valid_and_replays(g in graph(160)) {
        let out = color(&g, DEFAULT_T).unwrap();
        prop_assert!(!out.is_fallback());
        let d = DefectVector::one_t(DEFAULT_T);
        prop_assert!(is_valid(&g, out.coloring(), &d).unwrap());
        if let ColorOutcome::Reduced { coloring, trace } = &out {
            prop_assert_eq!(&trace.replay(), coloring);
        }
        let text = serialize_coloring(out.coloring());
        prop_assert_eq!(&parse_coloring(&text).unwrap(), out.coloring());
    }

    #[test]
    fn smaller_thresholds_still_color(g in graph(60), t in 1usize..10) {
        let out = color(&g, t).unwrap();
        prop_assert!(is_valid(&g, out.coloring(), &DefectVector::one_t(t)).unwrap());
    }

    #[test]
    fn exact_solver_finds_one_ten_on_small_planar(g in graph(30)) {
        let d = DefectVector::one_t(DEFAULT_T);
        let found = solve_exact(&g, &d, 5_000_000);
        prop_assert!(found.is_found());
    }
}

#[test]
fn degree_sum_matches_edges() {
    for seed in 0..20 {
        let g = gen_planar_girth5_with(seed, 80, &GenParams::structured());
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert!(g.neighbors(0).len() == g.degree(0));
    }
}
