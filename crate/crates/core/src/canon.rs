//! Canonical fingerprints of isomorphism classes for small graphs.
//!
//! The key is the lexicographically minimal upper-triangle adjacency
//! bitstring over all vertex relabelings that sort the degree sequence.
//! Restricting to degree-sorted relabelings is sound: any isomorphism
//! maps degree classes onto degree classes, so the minimum over that
//! subset equals the minimum over all relabelings with the same target
//! degree order. The key packs the bitstring into a `u64` so that
//! numeric order equals lexicographic order, which also reconstructs the
//! canonical representative directly.

use crate::graph::{bit, Graph};

/// Largest order for which the upper triangle fits the 64-bit key.
/// Exactness at census scale only needs n <= 8.
pub const MAX_CANON_VERTICES: usize = 11;

/// Order-independent fingerprint of an isomorphism class.
///
/// Two graphs on at most [`MAX_CANON_VERTICES`] vertices have equal keys
/// iff they are isomorphic. Ordering is by `(n, bitstring)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalKey {
    n: u8,
    bits: u64,
}

impl CanonicalKey {
    pub fn order(self) -> usize {
        self.n as usize
    }

    /// The canonical representative graph encoded by this key.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let pair_count = n * n.saturating_sub(1) / 2;
        let mut adj = vec![0u64; n];
        let mut pair = 0usize;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (pair_count - 1 - pair) & 1 == 1 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                pair += 1;
            }
        }
        Graph::from_adj_unchecked(adj)
    }
}

struct CanonSearch<'a> {
    adj: &'a [u64],
    n: usize,
    pair_count: usize,
    degrees: Vec<u32>,
    /// Required degree at each position (ascending).
    target: Vec<u32>,
    perm: Vec<usize>,
    used: u64,
    best: u64,
}

impl CanonSearch<'_> {
    fn run(&mut self) {
        self.place(0, 0, 0);
    }

    /// Assigns a vertex to `pos`; `acc` holds the bits of all columns up
    /// to `pos` (pair index 0 at the top of the used bit range).
    fn place(&mut self, pos: usize, acc: u64, pairs_done: usize) {
        if pos == self.n {
            if acc < self.best {
                self.best = acc;
            }
            return;
        }
        let want = self.target[pos];
        for v in 0..self.n {
            if self.used & bit(v) != 0 || self.degrees[v] != want {
                continue;
            }
            let vadj = self.adj[v];
            let mut col = 0u64;
            for i in 0..pos {
                col = (col << 1) | (vadj >> self.perm[i] & 1);
            }
            let pairs_after = pairs_done + pos;
            let next_acc = acc | (col << (self.pair_count - pairs_after));
            // Lexicographic prefix pruning against the best complete key.
            let prefix_mask = if pairs_after == self.pair_count {
                u64::MAX
            } else {
                !((1u64 << (self.pair_count - pairs_after)) - 1)
            };
            if next_acc > self.best & prefix_mask {
                continue;
            }
            self.perm[pos] = v;
            self.used |= bit(v);
            self.place(pos + 1, next_acc, pairs_after);
            self.used &= !bit(v);
        }
    }
}

/// Computes the canonical key of `g`. Exact for `n <=` [`MAX_CANON_VERTICES`].
pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_key_from_adj(g.adj_slice())
}

/// Slice-based entry point for the census hot loop.
pub(crate) fn canonical_key_from_adj(adj: &[u64]) -> CanonicalKey {
    let n = adj.len();
    assert!(
        n <= MAX_CANON_VERTICES,
        "canonical_key supports n <= {MAX_CANON_VERTICES}, got {n}"
    );
    if n <= 1 {
        return CanonicalKey { n: n as u8, bits: 0 };
    }
    let degrees: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let mut target = degrees.clone();
    target.sort_unstable();
    let pair_count = n * (n - 1) / 2;
    let mut search = CanonSearch {
        adj,
        n,
        pair_count,
        degrees,
        target,
        perm: vec![0; n],
        used: 0,
        best: u64::MAX,
    };
    search.run();
    debug_assert_ne!(search.best, u64::MAX);
    CanonicalKey { n: n as u8, bits: search.best }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        // Heap's algorithm, iteratively.
        let mut items: Vec<usize> = (0..n).collect();
        let mut out = vec![items.clone()];
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    items.swap(0, i);
                } else {
                    items.swap(c[i], i);
                }
                out.push(items.clone());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if b.vertex_count() != n {
            return false;
        }
        permutations(n).into_iter().any(|p| &a.relabel(&p) == b)
    }

    fn all_graphs(n: usize) -> Vec<Graph> {
        let pairs = n * (n - 1) / 2;
        let mut pair_list = Vec::new();
        for j in 1..n {
            for i in 0..j {
                pair_list.push((i, j));
            }
        }
        (0u64..(1 << pairs))
            .map(|mask| {
                let edges: Vec<_> = pair_list
                    .iter()
                    .enumerate()
                    .filter(|(idx, _)| mask >> idx & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn key_is_relabeling_invariant() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
            .unwrap();
        let key = canonical_key(&g);
        for p in permutations(6).into_iter().take(200) {
            assert_eq!(canonical_key(&g.relabel(&p)), key);
        }
    }

    #[test]
    fn distinct_small_graphs_get_distinct_keys() {
        let p4 = Graph::path(4).unwrap();
        let star = Graph::star(4).unwrap();
        assert_ne!(canonical_key(&p4), canonical_key(&star));
    }

    #[test]
    fn four_vertex_graphs_have_eleven_classes() {
        let graphs = all_graphs(4);
        let mut keys: Vec<CanonicalKey> = graphs.iter().map(canonical_key).collect();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(keys.len(), 11);

        // Cross-check the grouping against a brute-force pairwise
        // isomorphism oracle.
        let mut reps: Vec<Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, g)) {
                reps.push(g.clone());
            }
        }
        assert_eq!(reps.len(), 11);
    }

    #[test]
    fn keys_agree_with_pairwise_isomorphism_on_five_vertices() {
        let graphs = all_graphs(5);
        // Sample pairs; the full quadratic check would be slow in debug.
        for i in (0..graphs.len()).step_by(97) {
            for j in (i..graphs.len()).step_by(131) {
                let same_key = canonical_key(&graphs[i]) == canonical_key(&graphs[j]);
                let iso = brute_isomorphic(&graphs[i], &graphs[j]);
                assert_eq!(same_key, iso, "mismatch on masks {i} vs {j}");
            }
        }
    }

    #[test]
    fn representative_reconstruction_is_isomorphic() {
        let g = Graph::from_edges(7, &[(0, 2), (2, 4), (4, 6), (6, 1), (1, 3), (3, 5), (5, 0)])
            .unwrap();
        let key = canonical_key(&g);
        let rep = key.to_graph();
        assert_eq!(canonical_key(&rep), key);
        assert!(brute_isomorphic(&g, &rep));
    }
}
