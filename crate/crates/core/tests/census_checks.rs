//! Census cross-checks: enumeration completeness against a naive
//! labeled oracle, filter soundness on a random sample, agreement
//! between the theorem checks, and checkpoint resume behavior.
//!
//! The n=7 variants run when RCNG_LONG_TESTS is set; they re-scan two
//! million labeled graphs and take a few extra seconds.

mod common;

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rcng_core::census::{
    enumerate_both_connected, ng_census, two_two_filter, verify_no_2_2, CensusOptions,
};
use rcng_core::graph6::parse_graph6;
use rcng_core::solver::has_rainbow_k_coloring;
use rcng_core::{canonical_key, CanonicalKey};

fn long_tests_enabled() -> bool {
    std::env::var_os("RCNG_LONG_TESTS").is_some()
}

/// Naive oracle: every labeled graph, filter both-connected, collect
/// distinct keys without any complement pairing.
fn naive_both_connected_classes(n: usize) -> HashSet<CanonicalKey> {
    let pairs = common::pair_list(n);
    let mut keys = HashSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let g = common::graph_from_mask(n, mask, &pairs);
        if g.is_connected() && g.complement().is_connected() {
            keys.insert(canonical_key(&g));
        }
    }
    keys
}

#[test]
fn enumeration_matches_naive_oracle() {
    let max_n = if long_tests_enabled() { 7 } else { 6 };
    for n in 4..=max_n {
        let all = naive_both_connected_classes(n);
        let paired = enumerate_both_connected(n).unwrap();
        // Every emitted representative must be in the oracle set, and
        // unfolding complement pairs must recover it exactly.
        let mut unfolded = HashSet::new();
        let mut self_complementary = 0usize;
        for g in &paired {
            let k = canonical_key(g);
            let ck = canonical_key(&g.complement());
            assert!(k <= ck, "kept side must carry the smaller key");
            assert!(all.contains(&k));
            unfolded.insert(k);
            unfolded.insert(ck);
            if k == ck {
                self_complementary += 1;
            }
        }
        assert_eq!(unfolded, all, "pair unfolding must recover all classes at n={n}");
        assert_eq!(
            2 * paired.len() - self_complementary,
            all.len(),
            "pair counting identity at n={n}"
        );
    }
}

#[test]
fn known_class_counts() {
    // Frozen from the naive oracle run above.
    assert_eq!(enumerate_both_connected(4).unwrap().len(), 1);
    assert_eq!(enumerate_both_connected(5).unwrap().len(), 5);
    assert_eq!(enumerate_both_connected(6).unwrap().len(), 34);
    if long_tests_enabled() {
        assert_eq!(enumerate_both_connected(7).unwrap().len(), 331);
    }
}

#[test]
fn filter_soundness_on_random_sample() {
    // Every graph the filter excludes must genuinely fail a 2-coloring
    // search on at least one side. Sample at least 1% per order.
    let mut rng = StdRng::seed_from_u64(0x0f11_7e50);
    let max_n = if long_tests_enabled() { 7 } else { 6 };
    for n in 4..=max_n {
        let rejected: Vec<_> = enumerate_both_connected(n)
            .unwrap()
            .into_iter()
            .filter(|g| !two_two_filter(g).passes)
            .collect();
        let sample = (rejected.len() / 20).max(5).min(rejected.len());
        for _ in 0..sample {
            let g = &rejected[rng.random_range(0..rejected.len())];
            let comp = g.complement();
            let two_colorable_both = has_rainbow_k_coloring(g, 2).unwrap().is_some()
                && has_rainbow_k_coloring(&comp, 2).unwrap().is_some();
            assert!(!two_colorable_both, "filter wrongly excluded a (2,2) pair at n={n}");
        }
    }
}

#[test]
fn no22_agrees_with_census() {
    let opts = CensusOptions::default();
    let max_n = if long_tests_enabled() { 7 } else { 6 };
    for n in 4..=max_n {
        let census = ng_census(n, &opts).unwrap();
        let no22 = verify_no_2_2(n, &opts).unwrap();
        assert!(no22.holds);
        assert!(census.min_sum >= 5);
        for r in &census.records {
            assert!(!(r.rc_g == 2 && r.rc_gbar == 2));
        }
    }
}

#[test]
fn census_records_are_deterministic_across_thread_counts() {
    let one = ng_census(6, &CensusOptions { threads: 1, ..Default::default() }).unwrap();
    let four = ng_census(6, &CensusOptions { threads: 4, ..Default::default() }).unwrap();
    assert_eq!(one.records, four.records);
    assert_eq!(one.min_witness, four.min_witness);
    assert_eq!(one.max_witness, four.max_witness);
    assert_eq!(one.stats.search_nodes, four.stats.search_nodes);
    assert_eq!(one.stats.rc_searches, four.stats.rc_searches);
}

#[test]
fn checkpoint_resume_reproduces_results() {
    let dir = std::env::temp_dir().join(format!("rcng-ckpt-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("census6.ckpt");
    let _ = std::fs::remove_file(&path);

    let baseline = ng_census(6, &CensusOptions::default()).unwrap();
    let opts = CensusOptions { checkpoint: Some(path.clone()), ..Default::default() };
    let first = ng_census(6, &opts).unwrap();
    assert!(path.exists());
    assert_eq!(first.records, baseline.records);

    // Resume with every chunk already recorded: same records again.
    let resumed = ng_census(6, &opts).unwrap();
    assert_eq!(resumed.records, baseline.records);
    assert_eq!(resumed.class_count, baseline.class_count);

    // A torn trailing line (interrupted write) is tolerated.
    let mut contents = std::fs::read_to_string(&path).unwrap();
    contents.push_str("{\"chunk\": 9");
    std::fs::write(&path, &contents).unwrap();
    let repaired = ng_census(6, &opts).unwrap();
    assert_eq!(repaired.records, baseline.records);

    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn census_graphs_parse_back() {
    let report = ng_census(5, &CensusOptions::default()).unwrap();
    for r in &report.records {
        let g = parse_graph6(&r.graph6_g).unwrap();
        assert!(g.is_connected() && g.complement().is_connected());
        let mut seq = (0..g.vertex_count()).map(|v| g.degree(v)).collect::<Vec<_>>();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(seq, r.degree_sequence);
    }
}
