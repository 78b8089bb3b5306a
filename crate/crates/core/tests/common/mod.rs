//! Shared oracles for the integration suites: brute-force machinery
//! kept deliberately independent of the library's search and checker
//! paths (own adjacency lists, own path enumeration, no symmetry
//! breaking, no pruning).
#![allow(dead_code)] // each suite uses a different subset

use std::collections::HashSet;

use rcng_core::canonical_key;
use rcng_core::graph::Graph;

/// All upper-triangle pairs of an n-vertex graph in column-major order.
pub fn pair_list(n: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    pairs
}

pub fn graph_from_mask(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(p, _)| mask >> p & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edges(n, &edges).expect("mask describes a valid graph")
}

/// One representative per isomorphism class of connected graphs on n
/// vertices, by scanning every labeled graph.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    let pairs = pair_list(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let g = graph_from_mask(n, mask, &pairs);
        if g.is_connected() && seen.insert(canonical_key(&g)) {
            out.push(g);
        }
    }
    out
}

/// Does this edge-colored graph have a rainbow path between every pair?
/// Independent oracle: adjacency lists and exhaustive simple-path
/// enumeration, no state search.
pub fn naive_is_rainbow_connected(g: &Graph, edge_colors: &[(usize, usize, u32)]) -> bool {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let color = |a: usize, b: usize| -> u32 {
        edge_colors
            .iter()
            .find(|&&(u, v, _)| (u, v) == (a.min(b), a.max(b)))
            .map(|&(_, _, c)| c)
            .expect("edge is colored")
    };

    fn dfs(
        adj: &[Vec<usize>],
        color: &dyn Fn(usize, usize) -> u32,
        here: usize,
        goal: usize,
        visited: &mut Vec<bool>,
        used: &mut Vec<u32>,
    ) -> bool {
        if here == goal {
            return true;
        }
        for &next in &adj[here] {
            if visited[next] {
                continue;
            }
            let c = color(here, next);
            if used.contains(&c) {
                continue;
            }
            visited[next] = true;
            used.push(c);
            if dfs(adj, color, next, goal, visited, used) {
                return true;
            }
            used.pop();
            visited[next] = false;
        }
        false
    }

    for u in 0..n {
        for v in (u + 1)..n {
            let mut visited = vec![false; n];
            visited[u] = true;
            let mut used = Vec::new();
            if !dfs(&adj, &color, u, v, &mut visited, &mut used) {
                return false;
            }
        }
    }
    true
}

/// Exact rc by trying every coloring of every size, no symmetry
/// breaking: the reference the solver is measured against.
pub fn naive_rc(g: &Graph) -> u32 {
    let n = g.vertex_count();
    assert!(g.is_connected() && n >= 2);
    let edges = g.edges();
    let m = edges.len();
    for k in 1..=(n as u32 - 1) {
        let mut assignment = vec![1u32; m];
        loop {
            let colored: Vec<(usize, usize, u32)> = edges
                .iter()
                .zip(&assignment)
                .map(|(&(u, v), &c)| (u, v, c))
                .collect();
            if naive_is_rainbow_connected(g, &colored) {
                return k;
            }
            // Odometer over all k^m assignments.
            let mut pos = 0;
            loop {
                if pos == m {
                    break;
                }
                if assignment[pos] < k {
                    assignment[pos] += 1;
                    break;
                }
                assignment[pos] = 1;
                pos += 1;
            }
            if pos == m {
                break;
            }
        }
    }
    unreachable!("a spanning tree coloring with n-1 colors always works")
}
