//! Algebraic laws of the matching polynomial and invariants of the graph
//! plumbing, checked on random graphs.

use proptest::prelude::*;

use matchroots::families::parse_graph_input;
use matchroots::spectrum::distinct_matching_roots;
use matchroots::verify::{find_comatching_partners, verify_appendix, verify_tables, TABLE_PAIRS};
use matchroots::{characteristic_polynomial, matching_polynomial, Graph, IntPoly};

fn graph(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
            Graph::from_edges(n, edges.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

/// Random labeled tree from a parent array, plus isolated extra vertices.
fn forest(max_order: usize) -> impl Strategy<Value = Graph> {
    (2..=max_order).prop_flat_map(|n| {
        (proptest::collection::vec(any::<proptest::sample::Index>(), n - 1), 0..3usize).prop_map(move |(parents, t)| {
            let edges = parents.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1));
            Graph::from_edges(n, edges).unwrap().with_isolated(t).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn vertex_recurrence(g in graph(10), pick in any::<proptest::sample::Index>()) {
        let u = pick.index(g.order());
        let rest = g.delete_vertex(u).unwrap();
        let mut rhs = &IntPoly::x() * &matching_polynomial(&rest);
        for v in (0..g.order()).filter(|&v| g.has_edge(u, v)) {
            rhs = &rhs - &matching_polynomial(&g.delete_edge_ends(u, v).unwrap());
        }
        prop_assert_eq!(matching_polynomial(&g), rhs);
    }

    #[test]
    fn edge_recurrence(g in graph(10), pick in any::<proptest::sample::Index>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let (u, v) = edges[pick.index(edges.len())];
        let rhs = &matching_polynomial(&g.delete_edge(u, v).unwrap())
            - &matching_polynomial(&g.delete_edge_ends(u, v).unwrap());
        prop_assert_eq!(matching_polynomial(&g), rhs);
    }

    #[test]
    fn union_multiplies(g in graph(7), h in graph(7)) {
        let both = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(matching_polynomial(&both), &matching_polynomial(&g) * &matching_polynomial(&h));
    }

    #[test]
    fn forests_have_charpoly_mu(f in forest(12)) {
        prop_assert!(f.is_forest());
        prop_assert_eq!(characteristic_polynomial(&f), matching_polynomial(&f));
    }

    #[test]
    fn cycles_break_the_forest_law(g in graph(9)) {
        prop_assert_eq!(characteristic_polynomial(&g) == matching_polynomial(&g), g.is_forest());
    }

    #[test]
    fn relabeling_is_invisible(g in graph(10), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut state = seed;
        for i in (1..perm.len()).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm);
        prop_assert_eq!(matching_polynomial(&g), matching_polynomial(&h));
        prop_assert_eq!(g.canonical_form(), h.canonical_form());
        prop_assert!(g.is_isomorphic(&h));
    }

    #[test]
    fn graph6_round_trips(g in graph(20)) {
        let text = g.to_graph6().unwrap();
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn isolated_vertices_add_at_most_the_root_zero(g in graph(9), t in 1..4usize) {
        let z = distinct_matching_roots(&g);
        let has_zero = matching_polynomial(&g).trailing_zeros() > 0;
        let padded = distinct_matching_roots(&g.with_isolated(t).unwrap());
        prop_assert_eq!(padded, if has_zero { z } else { z + 1 });
    }
}

#[test]
fn comatching_is_symmetric_on_listed_pairs() {
    for (left, right) in TABLE_PAIRS {
        let (g, h) = (parse_graph_input(left).unwrap(), parse_graph_input(right).unwrap());
        if g.order() > 8 {
            continue;
        }
        let of_g = find_comatching_partners(&g, 8).unwrap();
        let of_h = find_comatching_partners(&h, 8).unwrap();
        assert!(of_g.iter().any(|p| p.is_isomorphic(&h)), "{left} misses {right}");
        assert!(of_h.iter().any(|p| p.is_isomorphic(&g)), "{right} misses {left}");
    }
}

#[test]
fn reports_are_deterministic_without_timing() {
    let render = || {
        let pool = |n| rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        [1, 4].map(|n| {
            pool(n).install(|| {
                let a = verify_appendix().unwrap().without_timing().to_json_line();
                let t = verify_tables().unwrap().without_timing().to_json_line();
                a + &t
            })
        })
    };
    let [one, four] = render();
    assert_eq!(one, four);
    assert!(!one.contains("elapsed_ms"));
}
