//! Structural digraph invariants checked over randomized inputs.

use cyclepack::constructions::random_regular_digraph;
use cyclepack::edgelist::{emit_digraph, emit_undirected, parse_digraph, parse_undirected};
use cyclepack::{Digraph, UndirectedGraph, VertexSet};
use proptest::prelude::*;

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, present)| {
            let mut arcs = Vec::new();
            for u in 0..n {
                for v in 0..n {
                    if u != v && present[u * n + v] {
                        arcs.push((u, v));
                    }
                }
            }
            Digraph::from_arc_list(n, &arcs).unwrap()
        })
}

fn arb_undirected(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, present)| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if present[u * n + v] {
                        edges.push((u, v));
                    }
                }
            }
            UndirectedGraph::from_edge_list(n, &edges).unwrap()
        })
}

proptest! {
    #[test]
    fn degree_sums_equal_arc_count(d in arb_digraph(9)) {
        let out: usize = (0..d.n()).map(|v| d.out_degree(v)).sum();
        let inn: usize = (0..d.n()).map(|v| d.in_degree(v)).sum();
        prop_assert_eq!(out, d.arc_count());
        prop_assert_eq!(inn, d.arc_count());
    }

    #[test]
    fn reverse_is_an_involution(d in arb_digraph(9)) {
        prop_assert_eq!(d.reverse().reverse(), d);
    }

    #[test]
    fn reverse_preserves_scc_partition(d in arb_digraph(9)) {
        prop_assert_eq!(d.scc(), d.reverse().scc());
    }

    #[test]
    fn partition_splits_arc_count(d in arb_digraph(9), mask in proptest::collection::vec(any::<bool>(), 9)) {
        let n = d.n();
        let xs: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();
        let ys: Vec<usize> = (0..n).filter(|&v| !mask[v]).collect();
        let x = VertexSet::new(xs, n).unwrap();
        let y = VertexSet::new(ys, n).unwrap();
        let (dx, _) = d.induced(&x).unwrap();
        let (dy, _) = d.induced(&y).unwrap();
        let (_, cut) = d.arcs_between(&x, &y).unwrap();
        prop_assert_eq!(dx.arc_count() + dy.arc_count() + cut, d.arc_count());
    }

    #[test]
    fn eulerian_cuts_are_balanced(
        n in 4usize..16,
        r in 1usize..4,
        seed in any::<u64>(),
        mask in proptest::collection::vec(any::<bool>(), 16),
    ) {
        prop_assume!(r < n / 2);
        let d = random_regular_digraph(n, r, seed).unwrap();
        prop_assert!(d.is_eulerian());
        let xs: Vec<usize> = (0..n).filter(|&v| mask[v]).collect();
        let ys: Vec<usize> = (0..n).filter(|&v| !mask[v]).collect();
        let x = VertexSet::new(xs, n).unwrap();
        let y = VertexSet::new(ys, n).unwrap();
        let (xy, _) = d.arcs_between(&x, &y).unwrap();
        let (yx, _) = d.arcs_between(&y, &x).unwrap();
        prop_assert_eq!(xy, yx);
    }

    #[test]
    fn edge_list_round_trip_digraph(d in arb_digraph(9)) {
        let text = emit_digraph(&d);
        prop_assert_eq!(parse_digraph(&text).unwrap(), d.clone());
        // writers are canonical: a second round trip is byte-identical
        prop_assert_eq!(emit_digraph(&parse_digraph(&text).unwrap()), text);
    }

    #[test]
    fn edge_list_round_trip_undirected(g in arb_undirected(9)) {
        let text = emit_undirected(&g);
        prop_assert_eq!(parse_undirected(&text).unwrap(), g);
    }
}
