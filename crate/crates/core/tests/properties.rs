//! Randomized invariants over arbitrary graphs.

use cyclemeet::connectivity::{is_k_connected, vertex_connectivity};
use cyclemeet::graph::Graph;
use cyclemeet::graph6::{emit_graph6, parse_graph6};
use cyclemeet::solve::{best_cycle_length, best_path_length};
use proptest::prelude::*;

/// Arbitrary graph on 1..=12 vertices from an edge-presence bit vector.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=12)
        .prop_flat_map(|n| {
            let pairs = n * (n.saturating_sub(1)) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let mut g = Graph::new(n).unwrap();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[idx] {
                        g.add_edge(u, v).unwrap();
                    }
                    idx += 1;
                }
            }
            g
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(g in arb_graph()) {
        let text = emit_graph6(&g);
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(g.n(), back.n());
        for u in 0..g.n() {
            prop_assert_eq!(g.neighbors_mask(u), back.neighbors_mask(u));
        }
    }

    #[test]
    fn components_partition_vertices(g in arb_graph()) {
        let comps = g.components();
        let mut seen = 0u64;
        for c in &comps {
            let mask = cyclemeet::graph::mask_of(c);
            prop_assert_eq!(seen & mask, 0); // pairwise disjoint
            seen |= mask;
        }
        prop_assert_eq!(seen, g.full_mask());
    }

    #[test]
    fn connectivity_bounded_by_min_degree(g in arb_graph()) {
        let k = vertex_connectivity(&g);
        if g.n() >= 2 {
            prop_assert!(k <= g.min_degree());
        }
        prop_assert!(is_k_connected(&g, k) || g.n() == 1);
        if g.n() > k + 1 {
            prop_assert!(!is_k_connected(&g, k + 1));
        }
    }

    #[test]
    fn cycle_never_longer_than_path_plus_one(g in arb_graph()) {
        let p = best_path_length(&g);
        let c = best_cycle_length(&g);
        // closing a cycle uses one more edge than the path it contains
        prop_assert!(c == 0 || c <= p + 1);
    }
}
