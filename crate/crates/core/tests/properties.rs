//! Property tests for the structural invariants.

mod common;

use proptest::prelude::*;

use rcng_core::graph::Graph;
use rcng_core::graph6::{parse_graph6, to_graph6};
use rcng_core::rainbow::{find_rainbow_path, is_rainbow_connected};
use rcng_core::{canonical_key, EdgeColoring};

/// A random graph: order in 2..=max_n, each pair flipped independently.
fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pair_count = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pair_count)).prop_map(
            |(n, flags)| {
                let pairs = common::pair_list(n);
                let edges: Vec<_> = pairs
                    .iter()
                    .zip(&flags)
                    .filter(|(_, &on)| on)
                    .map(|(&e, _)| e)
                    .collect();
                Graph::from_edges(n, &edges).expect("valid pairs")
            },
        )
    })
}

fn permutation_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in graph_strategy(16)) {
        let n = g.vertex_count();
        let comp = g.complement();
        prop_assert_eq!(g.edge_count() + comp.edge_count(), n * (n - 1) / 2);
        prop_assert_eq!(comp.complement(), g);
    }

    #[test]
    fn graph6_round_trips(g in graph_strategy(16)) {
        let encoded = to_graph6(&g);
        prop_assert_eq!(parse_graph6(&encoded).unwrap(), g);
    }

    #[test]
    fn canonical_key_is_relabeling_invariant(
        (g, perm) in graph_strategy(8).prop_flat_map(|g| {
            let n = g.vertex_count();
            (Just(g), permutation_strategy(n))
        })
    ) {
        prop_assert_eq!(canonical_key(&g.relabel(&perm)), canonical_key(&g));
    }

    #[test]
    fn coloring_documents_round_trip(
        (g, colors) in graph_strategy(10).prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), proptest::collection::vec(1u32..=4, m))
        })
    ) {
        let triples: Vec<_> = g
            .edges()
            .iter()
            .zip(&colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        let coloring = EdgeColoring::new(&g, 4, &triples).unwrap();
        let doc = coloring.to_doc();
        let parsed = EdgeColoring::parse_doc(&doc).unwrap();
        prop_assert_eq!(&parsed, &coloring);
        prop_assert_eq!(parsed.to_doc(), doc);
        prop_assert!(parsed.matches(&g));
    }

    /// Checker/witness consistency: whenever the checker accepts, every
    /// pair has an explicit rainbow path, and the returned path colors
    /// are pairwise distinct.
    #[test]
    fn checker_agrees_with_path_finder(
        (g, colors) in graph_strategy(7).prop_flat_map(|g| {
            let m = g.edge_count();
            (Just(g), proptest::collection::vec(1u32..=3, m))
        })
    ) {
        prop_assume!(g.is_connected());
        let triples: Vec<_> = g
            .edges()
            .iter()
            .zip(&colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        let coloring = EdgeColoring::new(&g, 3, &triples).unwrap();
        let connected = is_rainbow_connected(&g, &coloring).unwrap();
        let n = g.vertex_count();
        let mut all_pairs = true;
        for u in 0..n {
            for v in (u + 1)..n {
                match find_rainbow_path(&g, &coloring, u, v).unwrap() {
                    Some(path) => {
                        let mut cs: Vec<u32> = path
                            .iter()
                            .map(|&(a, b)| coloring.color_of(a, b).unwrap())
                            .collect();
                        let len = cs.len();
                        cs.sort_unstable();
                        cs.dedup();
                        prop_assert_eq!(cs.len(), len, "path repeats a color");
                    }
                    None => all_pairs = false,
                }
            }
        }
        prop_assert_eq!(connected, all_pairs);
    }

    /// The checker result is invariant under relabeling both the graph
    /// and the coloring.
    #[test]
    fn rainbow_connectivity_is_isomorphism_invariant(
        (g, colors, perm) in graph_strategy(6).prop_flat_map(|g| {
            let m = g.edge_count();
            let n = g.vertex_count();
            (Just(g), proptest::collection::vec(1u32..=3, m), permutation_strategy(n))
        })
    ) {
        prop_assume!(g.is_connected());
        let triples: Vec<_> = g
            .edges()
            .iter()
            .zip(&colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        let coloring = EdgeColoring::new(&g, 3, &triples).unwrap();
        let h = g.relabel(&perm);
        let mapped: Vec<_> = triples
            .iter()
            .map(|&(u, v, c)| (perm[u], perm[v], c))
            .collect();
        let h_coloring = EdgeColoring::new(&h, 3, &mapped).unwrap();
        prop_assert_eq!(
            is_rainbow_connected(&g, &coloring).unwrap(),
            is_rainbow_connected(&h, &h_coloring).unwrap()
        );
    }
}
