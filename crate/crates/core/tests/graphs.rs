mod common;

use std::collections::BTreeSet;

use comgraph::graph::{are_isomorphic, canonical_code, canonical_form, enumerate_graphs_up_to_iso};
use comgraph::SimpleGraph;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_code_ignores_relabeling((g, perm) in graph(8).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), shuffled(n))
    })) {
        let h = g.permuted(&perm);
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn edge_list_round_trip(g in graph(12)) {
        prop_assert_eq!(SimpleGraph::from_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(12)) {
        let c = g.complement();
        let n = g.vertex_count();
        prop_assert_eq!(c.edge_count() + g.edge_count(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn induced_subgraph_keeps_adjacency(g in graph(10), mask in any::<u16>()) {
        let keep: Vec<usize> = (0..g.vertex_count()).filter(|v| mask >> v & 1 == 1).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                prop_assert_eq!(sub.has_edge(i, j), i != j && g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn degree_sum_is_twice_edges(g in graph(16)) {
        prop_assert_eq!(g.degree_sequence().iter().sum::<usize>(), 2 * g.edge_count());
    }
}

/// Isomorphism classes of labeled graphs on n vertices, each keyed by its
/// least sorted edge list over all n! relabelings.
fn brute_force_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut perms = vec![(0..n).collect::<Vec<_>>()];
    let mut p: Vec<usize> = (0..n).collect();
    while common::next_permutation(&mut p) {
        perms.push(p.clone());
    }
    let mut seen = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let best = perms
            .iter()
            .map(|perm| {
                let mut bits: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &(u, v))| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                    .collect();
                bits.sort_unstable();
                bits
            })
            .min()
            .unwrap();
        seen.insert(best);
    }
    seen.len()
}

#[test]
fn enumeration_matches_brute_force_orbits() {
    for n in 0..=5 {
        assert_eq!(
            enumerate_graphs_up_to_iso(n).unwrap().len(),
            brute_force_classes(n),
            "n={n}"
        );
    }
}

#[test]
fn enumeration_counts_through_seven() {
    let counts: Vec<usize> = (0..=7)
        .map(|n| enumerate_graphs_up_to_iso(n).unwrap().len())
        .collect();
    assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn mantel_bound_on_small_triangle_free_graphs() {
    for n in 0..=6 {
        for g in enumerate_graphs_up_to_iso(n).unwrap() {
            if g.is_triangle_free() {
                assert!(g.edge_count() <= n * n / 4);
            }
        }
        // Attained by the balanced complete bipartite graph.
        let k = SimpleGraph::complete_bipartite(n / 2, n - n / 2);
        assert!(k.is_triangle_free());
        assert_eq!(k.edge_count(), n * n / 4);
    }
}

#[test]
fn guards() {
    assert!(canonical_code(&SimpleGraph::new(9)).is_err());
    assert!(enumerate_graphs_up_to_iso(8).is_err());
}
