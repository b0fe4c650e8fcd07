//! Max-flow/min-cut duality and witness soundness on randomized instances.

use cyclepack::menger::{
    max_disjoint_paths, min_separator_brute_force, separate_neighborhoods, verify_path_family,
    verify_separator,
};
use cyclepack::{Digraph, VertexSet};
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

fn subset(mask: &[bool], n: usize) -> VertexSet {
    VertexSet::new((0..n).filter(|&v| mask[v]).collect(), n).unwrap()
}

proptest! {
    #[test]
    fn duality_matches_brute_force(
        d in arb_digraph(7),
        um in proptest::collection::vec(any::<bool>(), 7),
        wm in proptest::collection::vec(any::<bool>(), 7),
    ) {
        let n = d.n();
        let u = subset(&um, n);
        let w = subset(&wm, n);
        prop_assume!(!u.is_empty() && !w.is_empty());
        let (family, sep) = max_disjoint_paths(&d, &u, &w).unwrap();
        prop_assert_eq!(family.len(), sep.s.len());
        prop_assert_eq!(family.len(), min_separator_brute_force(&d, &u, &w));
    }

    #[test]
    fn witnesses_pass_their_checkers(
        d in arb_digraph(8),
        um in proptest::collection::vec(any::<bool>(), 8),
        wm in proptest::collection::vec(any::<bool>(), 8),
    ) {
        let n = d.n();
        let u = subset(&um, n);
        let w = subset(&wm, n);
        prop_assume!(!u.is_empty() && !w.is_empty());
        let (family, sep) = max_disjoint_paths(&d, &u, &w).unwrap();
        prop_assert!(verify_path_family(&d, &u, &w, &family));
        prop_assert!(verify_separator(&d, &u, &w, &sep));
    }

    #[test]
    fn family_size_bounded_by_endpoint_sets(
        d in arb_digraph(8),
        um in proptest::collection::vec(any::<bool>(), 8),
        wm in proptest::collection::vec(any::<bool>(), 8),
    ) {
        let n = d.n();
        let u = subset(&um, n);
        let w = subset(&wm, n);
        prop_assume!(!u.is_empty() && !w.is_empty());
        let (family, _) = max_disjoint_paths(&d, &u, &w).unwrap();
        prop_assert!(family.len() <= u.len().min(w.len()));
        // shared endpoints always admit the length-zero path through themselves
        prop_assert!(family.len() >= u.intersection(&w).len());
    }

    #[test]
    fn output_is_deterministic(
        d in arb_digraph(8),
        um in proptest::collection::vec(any::<bool>(), 8),
        wm in proptest::collection::vec(any::<bool>(), 8),
    ) {
        let n = d.n();
        let u = subset(&um, n);
        let w = subset(&wm, n);
        prop_assume!(!u.is_empty() && !w.is_empty());
        let (f1, s1) = max_disjoint_paths(&d, &u, &w).unwrap();
        let (f2, s2) = max_disjoint_paths(&d, &u, &w).unwrap();
        prop_assert_eq!(f1.to_value().to_string(), f2.to_value().to_string());
        prop_assert_eq!(s1.to_value().to_string(), s2.to_value().to_string());
    }

    #[test]
    fn neighborhood_paths_avoid_the_hub(d in arb_digraph(8), hub in 0usize..8) {
        prop_assume!(hub < d.n());
        let (family, sep) = separate_neighborhoods(&d, hub).unwrap();
        for p in &family.paths {
            prop_assert!(!p.contains(&hub));
            prop_assert!(d.out(hub).contains(&p[0]));
            prop_assert!(d.in_neighbors(hub).contains(p.last().unwrap()));
        }
        prop_assert_eq!(family.len(), sep.s.len());
    }
}
