//! Exhaustive invariant checks over every connected graph at small
//! orders: the clique/tree characterizations of rc, the diameter lower
//! bound, witness validity, the connected-domination relation, and the
//! subset-enumeration oracle for gamma_c.
//!
//! n <= 6 runs always; the n = 7 sweeps run under RCNG_LONG_TESTS.

mod common;

use rcng_core::graph::Graph;
use rcng_core::rainbow::is_rainbow_connected;
use rcng_core::solver::rc_exact;

fn long_tests_enabled() -> bool {
    std::env::var_os("RCNG_LONG_TESTS").is_some()
}

/// Independent gamma_c oracle: adjacency lists, all subsets in numeric
/// order, plain DFS connectivity.
fn naive_gamma_c(g: &Graph) -> u32 {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut best = n as u32;
    for subset in 1u64..(1 << n) {
        if subset.count_ones() >= best {
            continue;
        }
        let dominated = (0..n)
            .all(|v| subset & (1 << v) != 0 || adj[v].iter().any(|&u| subset & (1 << u) != 0));
        if !dominated {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| subset & (1 << v) != 0).collect();
        let mut seen = vec![false; n];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if subset & (1 << u) != 0 && !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if members.iter().all(|&v| seen[v]) {
            best = subset.count_ones();
        }
    }
    best
}

#[test]
fn rc_characterizations_hold_for_all_connected_graphs_up_to_6() {
    for n in 2..=6usize {
        for g in common::connected_classes(n) {
            let cert = rc_exact(&g).unwrap();
            assert_eq!(cert.value == 1, g.is_clique(), "clique rule on {g:?}");
            assert_eq!(cert.value == n as u32 - 1, g.is_tree(), "tree rule on {g:?}");
            let diam = g.diameter().finite().unwrap();
            assert!(cert.value >= diam);
            assert_eq!(cert.witness.k(), cert.value);
            assert_eq!(is_rainbow_connected(&g, &cert.witness), Ok(true));
        }
    }
}

#[test]
fn gamma_c_matches_subset_oracle_for_all_connected_graphs() {
    let max_n = if long_tests_enabled() { 7 } else { 6 };
    for n in 2..=max_n {
        for g in common::connected_classes(n) {
            assert_eq!(
                g.connected_domination_number().unwrap(),
                naive_gamma_c(&g),
                "gamma_c mismatch on {g:?}"
            );
        }
    }
}

#[test]
fn rc_is_bounded_by_gamma_c_plus_2_at_min_degree_2() {
    let max_n = if long_tests_enabled() { 7 } else { 6 };
    for n in 4..=max_n {
        for g in common::connected_classes(n) {
            if g.degree_profile().min < 2 {
                continue;
            }
            let rc = rc_exact(&g).unwrap().value;
            let gamma = g.connected_domination_number().unwrap();
            assert!(rc <= gamma + 2, "rc {rc} > gamma_c {gamma} + 2 on {g:?}");
        }
    }
}
