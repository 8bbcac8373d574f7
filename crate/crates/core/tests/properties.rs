mod common;

use proptest::prelude::*;
use tribound_core::canon::canonical_form;
use tribound_core::solvers::{independence_number, matching_number};
use tribound_core::verify::{check_bound, Theorem};
use tribound_core::{from_graph6, to_graph6, Graph};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let perm = Just((0..g.order()).collect::<Vec<_>>()).prop_shuffle();
        (Just(g), perm)
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let text = to_graph6(&g);
        prop_assert_eq!(from_graph6(text.as_bytes()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(30)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let n = g.order();
        prop_assert_eq!(g.size() + g.complement().size(), n * (n - 1) / 2);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(14)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn solvers_agree_with_oracles(g in graph(11)) {
        prop_assert_eq!(matching_number(&g), common::brute_matching(&g));
        prop_assert_eq!(independence_number(&g).value, common::brute_alpha(&g));
    }

    #[test]
    fn invariants_survive_relabeling((g, perm) in graph_and_perm(16)) {
        let h = g.permuted(&perm);
        prop_assert_eq!(matching_number(&g), matching_number(&h));
        prop_assert_eq!(independence_number(&g).value, independence_number(&h).value);
    }

    #[test]
    fn bounds_hold_on_random_class_graphs(seed in any::<u64>(), n in 1usize..=16) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_class_graph(&mut rng, n, 0.6);
        for t in Theorem::BOTH {
            let r = check_bound(&g, t.spec()).unwrap();
            prop_assert!(r.holds(), "{} {:?}", g, t);
        }
    }
}
