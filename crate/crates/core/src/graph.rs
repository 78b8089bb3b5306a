//! Simple undirected graphs on at most 62 vertices.
//!
//! Adjacency is stored as one `u64` neighbor bitmask per vertex, so the
//! structural queries the census runs millions of times (connectivity,
//! complement, degrees) are plain word operations. Graphs are immutable
//! after construction and safe to share across threads.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count: graph6 single-byte headers top out at 62.
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {n} exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices { n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("gamma_c undefined: graph is disconnected")]
    Disconnected,
}

#[inline(always)]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline(always)]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertices, backed by a single machine word.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(bit(v))
    }

    /// All vertices `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        self.0 & bit(v) != 0
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= bit(v);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !bit(v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex in the set, if any.
    #[inline]
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    #[inline]
    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            debug_assert!(v < 64);
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterates set bits from lowest to highest.
#[derive(Clone)]
pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// Diameter of a graph; disconnected graphs get a distinguished value
/// instead of a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diameter {
    Finite(u32),
    Infinite,
}

impl Diameter {
    #[inline]
    pub fn finite(self) -> Option<u32> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        matches!(self, Diameter::Finite(_))
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => write!(f, "infinite"),
        }
    }
}

/// Minimum degree, maximum degree, and the full degree sequence
/// (sorted descending).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min: u32,
    pub max: u32,
    pub sequence: Vec<u32>,
}

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are idempotent;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Ok(Graph { n, adj, m })
    }

    /// Builds a graph directly from neighbor bitmasks. The caller must
    /// guarantee symmetry and a zero diagonal; both are checked in debug
    /// builds only, since this sits on the census hot path.
    pub(crate) fn from_adj_unchecked(adj: Vec<u64>) -> Graph {
        let n = adj.len();
        debug_assert!(n <= MAX_VERTICES);
        #[cfg(debug_assertions)]
        {
            for v in 0..n {
                debug_assert_eq!(adj[v] & bit(v), 0, "self-loop at {v}");
                debug_assert_eq!(adj[v] & !low_mask(n), 0, "bits outside 0..{n}");
                for u in v + 1..n {
                    debug_assert_eq!(adj[v] & bit(u) != 0, adj[u] & bit(v) != 0);
                }
            }
        }
        let m = adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2;
        Graph { n, adj, m }
    }

    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, &[])
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let adj = (0..n).map(|v| low_mask(n) & !bit(v)).collect();
        Ok(Graph::from_adj_unchecked(adj))
    }

    /// Path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0 - 1 - ... - n-1 - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::VertexOutOfRange { vertex: n, n });
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges)
    }

    /// Star with center 0 and leaves `1..n`.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    #[inline]
    pub(crate) fn adj_bits(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub(crate) fn adj_slice(&self) -> &[u64] {
        &self.adj
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            let mut higher = self.adj[u] & !low_mask(u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mask = low_mask(self.n);
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & mask & !bit(v))
            .collect();
        Graph::from_adj_unchecked(adj)
    }

    /// Vertices reachable from `start`, as a bitmask.
    pub(crate) fn reach_from(&self, start: usize) -> u64 {
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach_from(0) == low_mask(self.n)
    }

    /// BFS distances from `v`; unreachable vertices get `u32::MAX`.
    pub fn bfs_distances(&self, v: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[v] = 0;
        let mut seen = bit(v);
        let mut frontier = seen;
        let mut d = 0u32;
        while frontier != 0 {
            d += 1;
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u];
            }
            frontier = next & !seen;
            seen |= frontier;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                dist[u] = d;
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        let full = low_mask(self.n);
        let mut diam = 0u32;
        for v in 0..self.n {
            let mut seen = bit(v);
            let mut frontier = seen;
            let mut ecc = 0u32;
            while frontier != 0 {
                let mut next = 0u64;
                let mut f = frontier;
                while f != 0 {
                    let u = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[u];
                }
                frontier = next & !seen;
                seen |= frontier;
                if frontier != 0 {
                    ecc += 1;
                }
            }
            if seen != full {
                return Diameter::Infinite;
            }
            diam = diam.max(ecc);
        }
        Diameter::Finite(diam)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sequence: Vec<u32> = (0..self.n).map(|v| self.degree(v)).collect();
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeProfile {
            min: sequence.last().copied().unwrap_or(0),
            max: sequence.first().copied().unwrap_or(0),
            sequence,
        }
    }

    /// First and second neighborhoods of `v`: vertices at distance
    /// exactly 1 and exactly 2.
    pub fn neighborhoods(&self, v: usize) -> (VertexSet, VertexSet) {
        assert!(v < self.n, "vertex {v} out of range");
        let n1 = self.adj[v];
        let mut n2 = 0u64;
        let mut f = n1;
        while f != 0 {
            let u = f.trailing_zeros() as usize;
            f &= f - 1;
            n2 |= self.adj[u];
        }
        n2 &= !n1 & !bit(v);
        (VertexSet(n1), VertexSet(n2))
    }

    #[inline]
    pub fn is_clique(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    #[inline]
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m == self.n - 1 && self.is_connected()
    }

    /// Is the induced subgraph on `verts` connected (and nonempty)?
    pub(crate) fn induced_connected(&self, verts: u64) -> bool {
        if verts == 0 {
            return false;
        }
        let start = verts.trailing_zeros() as usize;
        let mut seen = bit(start);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[u] & verts;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == verts
    }

    /// Exact minimum size of a connected dominating set, by enumerating
    /// vertex subsets in increasing cardinality with early exit. Intended
    /// for n <= 16.
    pub fn connected_domination_number(&self) -> Result<u32, GraphError> {
        if !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        if self.n <= 1 {
            return Ok(self.n as u32);
        }
        let full = low_mask(self.n);
        for size in 1..=self.n {
            let mut subset = low_mask(size);
            loop {
                let mut covered = subset;
                let mut f = subset;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    covered |= self.adj[v];
                }
                if covered == full && self.induced_connected(subset) {
                    return Ok(size as u32);
                }
                // Gosper's hack: next subset of the same popcount.
                let c = subset & subset.wrapping_neg();
                let r = subset + c;
                subset = (((r ^ subset) >> 2) / c) | r;
                if subset > full {
                    break;
                }
            }
        }
        // D = V always dominates and is connected.
        unreachable!("connected graph has a connected dominating set")
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut f = self.adj[u];
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                adj[perm[u]] |= bit(perm[v]);
            }
        }
        Graph::from_adj_unchecked(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}
