//! Exact rainbow connection numbers.
//!
//! `rc_exact` applies the clique and tree shortcuts, then iteratively
//! deepens a k-coloring search starting from `max(diam, 2)`. The search
//! assigns colors edge by edge with canonical symmetry breaking (the
//! first edge gets color 1, and each edge may use at most one more than
//! the largest color used so far), and prunes partial assignments with a
//! necessary condition: every vertex pair must retain a candidate
//! rainbow route when uncolored edges are treated as wildcards.
//!
//! For k <= 3 the candidate routes are enumerated explicitly per pair
//! (a rainbow path under k colors has at most k edges), which makes the
//! pruning check a cheap scan; for larger k the wildcard condition is
//! evaluated by a relaxed state search.

use std::fmt;

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{bit, low_mask, Diameter, Graph};
use crate::rainbow::is_rainbow_connected;

/// rc_exact refuses graphs above this order unless the effort override
/// is set; the search is exponential and the census never needs more.
pub const DEFAULT_ORDER_LIMIT: usize = 10;

/// Hard cap for the k-coloring search (state bitmasks).
pub const MAX_SEARCH_COLORS: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("rc is defined here for graphs with at least 2 vertices, got {n}")]
    OrderTooSmall { n: usize },
    #[error("rc_exact refuses n={n} > {limit} without the effort override")]
    TooLarge { n: usize, limit: usize },
    #[error("k={k} outside 1..={m} for this graph")]
    KOutOfRange { k: u32, m: usize },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// How the lower bound in an [`RcCertificate`] was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    CliqueRule,
    TreeRule,
    DiameterOnly,
    ExhaustiveSearchAtKMinus1,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Evidence::CliqueRule => "clique-rule",
            Evidence::TreeRule => "tree-rule",
            Evidence::DiameterOnly => "diameter-only",
            Evidence::ExhaustiveSearchAtKMinus1 => "exhaustive-search-at-k-minus-1",
        };
        f.write_str(s)
    }
}

/// Exact rc value with a witness coloring and lower-bound evidence.
#[derive(Debug, Clone)]
pub struct RcCertificate {
    pub value: u32,
    pub witness: EdgeColoring,
    pub evidence: Evidence,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolverOptions {
    /// Allow rc_exact on graphs larger than [`DEFAULT_ORDER_LIMIT`].
    pub effort_override: bool,
}

/// Spanning-tree upper bound: tree edges get distinct colors 1..n-1,
/// the remaining edges reuse color 1. Always rainbow connected.
pub fn rc_upper_tree(g: &Graph) -> Result<EdgeColoring, SolverError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(SolverError::OrderTooSmall { n });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    // BFS tree from vertex 0, edges in discovery order.
    let mut tree_color: Vec<Option<u32>> = vec![None; g.edges().len()];
    let edges = g.edges();
    let slot = |u: usize, v: usize| {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("edge of g")
    };
    let mut seen = bit(0);
    let mut queue = vec![0usize];
    let mut head = 0;
    let mut next_color = 0u32;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        let mut nb = g.adj_bits(v) & !seen;
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            seen |= bit(w);
            next_color += 1;
            tree_color[slot(v, w)] = Some(next_color);
            queue.push(w);
        }
    }
    let k = (n - 1) as u32;
    let colors: Vec<u32> = tree_color.into_iter().map(|c| c.unwrap_or(1)).collect();
    Ok(EdgeColoring::from_slots(g, k, colors))
}

/// Statistics from one or more coloring searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub nodes: u64,
}

/// A candidate rainbow route for one vertex pair: the slots of its edges.
type Route = Vec<u16>;

enum Prune {
    /// Complete per-pair route lists; exact for k <= 3.
    Routes {
        pair_routes: Vec<Vec<Route>>,
        /// slot -> indices into pair_routes
        slot_pairs: Vec<Vec<u32>>,
    },
    /// Relaxed state search treating uncolored edges as wildcards.
    Wildcard,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    m: usize,
    k: u32,
    edges: Vec<(usize, usize)>,
    colors: Vec<u32>,
    /// Dense color lookup, kept in sync with `colors`.
    matrix: Vec<u32>,
    prune: Prune,
    nodes: u64,
    /// Scratch for the wildcard relaxation: per vertex, best wildcard
    /// budget seen per color mask (u8::MAX = unseen).
    wild_best: Vec<u8>,
    wild_queue: Vec<(usize, u32)>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, k: u32) -> Option<Search<'a>> {
        let n = g.vertex_count();
        let edges = g.edges();
        let m = edges.len();
        let prune = if k <= 3 {
            let (pair_routes, slot_pairs) = build_routes(g, k, &edges)?;
            Prune::Routes { pair_routes, slot_pairs }
        } else {
            Prune::Wildcard
        };
        Some(Search {
            g,
            n,
            m,
            k,
            edges,
            colors: vec![0; m],
            matrix: vec![0; n * n],
            prune,
            nodes: 0,
            wild_best: Vec::new(),
            wild_queue: Vec::new(),
        })
    }

    fn run(&mut self) -> Option<Vec<u32>> {
        if self.m == 0 {
            return Some(Vec::new());
        }
        if self.dfs(0, 0) {
            Some(self.colors.clone())
        } else {
            None
        }
    }

    fn dfs(&mut self, depth: usize, max_used: u32) -> bool {
        if depth == self.m {
            // Both prune modes are exact once every edge is colored, so
            // reaching full depth means the coloring is a witness.
            return true;
        }
        let (u, v) = self.edges[depth];
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            self.nodes += 1;
            self.colors[depth] = c;
            self.matrix[u * self.n + v] = c;
            self.matrix[v * self.n + u] = c;
            if self.feasible_after(depth) && self.dfs(depth + 1, max_used.max(c)) {
                return true;
            }
        }
        self.colors[depth] = 0;
        self.matrix[u * self.n + v] = 0;
        self.matrix[v * self.n + u] = 0;
        false
    }

    fn feasible_after(&mut self, depth: usize) -> bool {
        match &self.prune {
            Prune::Routes { pair_routes, slot_pairs } => {
                for &pair in &slot_pairs[depth] {
                    let routes = &pair_routes[pair as usize];
                    if !routes.iter().any(|r| route_open(r, &self.colors)) {
                        return false;
                    }
                }
                true
            }
            Prune::Wildcard => self.wildcard_ok(),
        }
    }

    /// Every vertex pair must still admit a walk whose colored edges are
    /// pairwise distinct and whose total length fits within k.
    fn wildcard_ok(&mut self) -> bool {
        let full = low_mask(self.n);
        for src in 0..self.n - 1 {
            let targets = full & !low_mask(src + 1);
            if !self.wildcard_reaches(src, targets) {
                return false;
            }
        }
        true
    }

    fn wildcard_reaches(&mut self, src: usize, targets: u64) -> bool {
        let k = self.k;
        let states = 1usize << k;
        self.wild_best.clear();
        self.wild_best.resize(self.n * states, u8::MAX);
        self.wild_queue.clear();
        let mut remaining = targets & !bit(src);
        if remaining == 0 {
            return true;
        }
        self.wild_best[src * states] = 0;
        self.wild_queue.push((src, 0));
        let mut head = 0;
        while head < self.wild_queue.len() {
            let (v, mask) = self.wild_queue[head];
            head += 1;
            let extra = self.wild_best[v * states + mask as usize];
            let used = mask.count_ones() + extra as u32;
            let mut nb = self.g.adj_bits(v);
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                let color = self.matrix[v * self.n + w];
                let (next_mask, next_extra) = if color == 0 {
                    if used + 1 > k {
                        continue;
                    }
                    (mask, extra + 1)
                } else {
                    let cb = 1u32 << (color - 1);
                    if mask & cb != 0 {
                        continue;
                    }
                    (mask | cb, extra)
                };
                let cell = w * states + next_mask as usize;
                if next_extra < self.wild_best[cell] {
                    self.wild_best[cell] = next_extra;
                    remaining &= !bit(w);
                    if remaining == 0 {
                        return true;
                    }
                    self.wild_queue.push((w, next_mask));
                }
            }
        }
        false
    }
}

/// A route stays open while its assigned colors are pairwise distinct.
#[inline]
fn route_open(route: &[u16], colors: &[u32]) -> bool {
    match route.len() {
        2 => {
            let a = colors[route[0] as usize];
            let b = colors[route[1] as usize];
            a == 0 || b == 0 || a != b
        }
        3 => {
            let a = colors[route[0] as usize];
            let b = colors[route[1] as usize];
            let c = colors[route[2] as usize];
            (a == 0 || b == 0 || a != b)
                && (a == 0 || c == 0 || a != c)
                && (b == 0 || c == 0 || b != c)
        }
        _ => unreachable!("routes have 2 or 3 edges"),
    }
}

/// Enumerates, for every non-adjacent vertex pair, all simple paths with
/// at most k edges (k <= 3). Returns `None` when some pair has no route
/// at all, i.e. no k-coloring can exist.
#[allow(clippy::type_complexity)]
fn build_routes(
    g: &Graph,
    k: u32,
    edges: &[(usize, usize)],
) -> Option<(Vec<Vec<Route>>, Vec<Vec<u32>>)> {
    let n = g.vertex_count();
    let slot = |u: usize, v: usize| -> u16 {
        let key = if u < v { (u, v) } else { (v, u) };
        edges.binary_search(&key).expect("edge of g") as u16
    };
    let mut pair_routes: Vec<Vec<Route>> = Vec::new();
    let mut slot_pairs: Vec<Vec<u32>> = vec![Vec::new(); edges.len()];
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let mut routes: Vec<Route> = Vec::new();
            if k >= 2 {
                let mut common = g.adj_bits(u) & g.adj_bits(v);
                while common != 0 {
                    let w = common.trailing_zeros() as usize;
                    common &= common - 1;
                    routes.push(vec![slot(u, w), slot(w, v)]);
                }
            }
            if k >= 3 {
                let mut na = g.adj_bits(u) & !bit(v);
                while na != 0 {
                    let a = na.trailing_zeros() as usize;
                    na &= na - 1;
                    let mut nb = g.adj_bits(v) & g.adj_bits(a) & !bit(u) & !bit(a);
                    while nb != 0 {
                        let b = nb.trailing_zeros() as usize;
                        nb &= nb - 1;
                        routes.push(vec![slot(u, a), slot(a, b), slot(b, v)]);
                    }
                }
            }
            if routes.is_empty() {
                return None;
            }
            let pair_id = pair_routes.len() as u32;
            for r in &routes {
                for &s in r {
                    if !slot_pairs[s as usize].contains(&pair_id) {
                        slot_pairs[s as usize].push(pair_id);
                    }
                }
            }
            pair_routes.push(routes);
        }
    }
    Some((pair_routes, slot_pairs))
}

/// Searches for a k-coloring under which `g` is rainbow connected.
/// Exhaustive up to color-permutation symmetry; `None` means no such
/// coloring exists.
pub fn has_rainbow_k_coloring(g: &Graph, k: u32) -> Result<Option<EdgeColoring>, SolverError> {
    Ok(has_rainbow_k_coloring_counted(g, k)?.0)
}

pub(crate) fn has_rainbow_k_coloring_counted(
    g: &Graph,
    k: u32,
) -> Result<(Option<EdgeColoring>, SearchStats), SolverError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(SolverError::OrderTooSmall { n });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    let m = g.edge_count();
    if k < 1 || k as usize > m {
        return Err(SolverError::KOutOfRange { k, m });
    }
    if k > MAX_SEARCH_COLORS {
        return Err(SolverError::Coloring(ColoringError::TooManyColors {
            k,
            limit: MAX_SEARCH_COLORS,
        }));
    }
    // Quick necessary condition: a rainbow path has at most k edges.
    if let Diameter::Finite(d) = g.diameter() {
        if d > k {
            return Ok((None, SearchStats::default()));
        }
    }
    let mut search = match Search::new(g, k) {
        Some(s) => s,
        None => return Ok((None, SearchStats::default())),
    };
    let found = search.run();
    let stats = SearchStats { nodes: search.nodes };
    match found {
        Some(colors) => {
            let coloring = EdgeColoring::from_slots(g, k, colors);
            debug_assert_eq!(is_rainbow_connected(g, &coloring), Ok(true));
            Ok((Some(coloring), stats))
        }
        None => Ok((None, stats)),
    }
}

/// Exact rc with the default options (refuses n > [`DEFAULT_ORDER_LIMIT`]).
pub fn rc_exact(g: &Graph) -> Result<RcCertificate, SolverError> {
    rc_exact_with(g, &SolverOptions::default())
}

pub fn rc_exact_with(g: &Graph, opts: &SolverOptions) -> Result<RcCertificate, SolverError> {
    Ok(rc_exact_counted(g, opts)?.0)
}

pub(crate) fn rc_exact_counted(
    g: &Graph,
    opts: &SolverOptions,
) -> Result<(RcCertificate, SearchStats), SolverError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(SolverError::OrderTooSmall { n });
    }
    if !g.is_connected() {
        return Err(SolverError::Disconnected);
    }
    if n > DEFAULT_ORDER_LIMIT && !opts.effort_override {
        return Err(SolverError::TooLarge { n, limit: DEFAULT_ORDER_LIMIT });
    }
    if g.is_clique() {
        let witness = EdgeColoring::constant(g, 1, 1)?;
        let cert = RcCertificate { value: 1, witness, evidence: Evidence::CliqueRule };
        return Ok((cert, SearchStats::default()));
    }
    if g.is_tree() {
        let witness = rc_upper_tree(g)?;
        let cert = RcCertificate {
            value: (n - 1) as u32,
            witness,
            evidence: Evidence::TreeRule,
        };
        return Ok((cert, SearchStats::default()));
    }
    let diam = g
        .diameter()
        .finite()
        .expect("connected graph has finite diameter");
    let start = diam.max(2);
    let mut stats = SearchStats::default();
    for k in start..=(n as u32 - 1) {
        let (found, s) = has_rainbow_k_coloring_counted(g, k)?;
        stats.nodes += s.nodes;
        if let Some(witness) = found {
            let evidence = if k == start {
                Evidence::DiameterOnly
            } else {
                Evidence::ExhaustiveSearchAtKMinus1
            };
            return Ok((RcCertificate { value: k, witness, evidence }, stats));
        }
    }
    unreachable!("spanning-tree coloring guarantees rc <= n-1")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_upper_bound_coloring_is_rainbow() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::star(6).unwrap(),
            Graph::complete(4).unwrap(),
            Graph::cycle(6).unwrap(),
        ] {
            let c = rc_upper_tree(&g).unwrap();
            assert_eq!(c.k(), g.vertex_count() as u32 - 1);
            assert_eq!(is_rainbow_connected(&g, &c), Ok(true));
        }
    }

    #[test]
    fn rc_upper_tree_rejects_bad_input() {
        assert!(matches!(
            rc_upper_tree(&Graph::empty(3).unwrap()),
            Err(SolverError::Disconnected)
        ));
        assert!(matches!(
            rc_upper_tree(&Graph::empty(1).unwrap()),
            Err(SolverError::OrderTooSmall { n: 1 })
        ));
    }

    #[test]
    fn k_coloring_search_examples() {
        let c6 = Graph::cycle(6).unwrap();
        assert!(has_rainbow_k_coloring(&c6, 2).unwrap().is_none());
        let found = has_rainbow_k_coloring(&c6, 3).unwrap().unwrap();
        assert_eq!(is_rainbow_connected(&c6, &found), Ok(true));

        let k4 = Graph::complete(4).unwrap();
        let all1 = has_rainbow_k_coloring(&k4, 1).unwrap().unwrap();
        assert_eq!(all1.used_colors(), 1);
    }

    #[test]
    fn k_out_of_range_is_rejected() {
        let p4 = Graph::path(4).unwrap();
        assert!(matches!(
            has_rainbow_k_coloring(&p4, 0),
            Err(SolverError::KOutOfRange { .. })
        ));
        assert!(matches!(
            has_rainbow_k_coloring(&p4, 4),
            Err(SolverError::KOutOfRange { .. })
        ));
    }

    #[test]
    fn rc_exact_paper_unit_values() {
        let rc = |g: &Graph| rc_exact(g).unwrap().value;
        assert_eq!(rc(&Graph::path(4).unwrap()), 3);
        assert_eq!(rc(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(rc(&Graph::cycle(6).unwrap()), 3);
        for n in 3..=6 {
            assert_eq!(rc(&Graph::complete(n).unwrap()), 1);
        }
        for k in 4..=10 {
            assert_eq!(rc(&Graph::cycle(k).unwrap()), k.div_ceil(2) as u32, "C_{k}");
        }
    }

    #[test]
    fn rc_exact_certificates_are_consistent() {
        for g in [
            Graph::path(5).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(5).unwrap(),
            Graph::star(6).unwrap(),
        ] {
            let cert = rc_exact(&g).unwrap();
            assert_eq!(cert.witness.k(), cert.value);
            assert_eq!(is_rainbow_connected(&g, &cert.witness), Ok(true));
            if let Diameter::Finite(d) = g.diameter() {
                assert!(cert.value >= d);
            }
        }
    }

    #[test]
    fn evidence_kinds() {
        assert_eq!(
            rc_exact(&Graph::complete(4).unwrap()).unwrap().evidence,
            Evidence::CliqueRule
        );
        assert_eq!(
            rc_exact(&Graph::path(5).unwrap()).unwrap().evidence,
            Evidence::TreeRule
        );
        // C_5: diam 2, rc 3 -> one failed search.
        assert_eq!(
            rc_exact(&Graph::cycle(5).unwrap()).unwrap().evidence,
            Evidence::ExhaustiveSearchAtKMinus1
        );
        // C_6: diam 3 = rc -> succeeds at the first k tried.
        assert_eq!(
            rc_exact(&Graph::cycle(6).unwrap()).unwrap().evidence,
            Evidence::DiameterOnly
        );
    }

    #[test]
    fn rc_exact_respects_order_limit() {
        let big = Graph::cycle(11).unwrap();
        assert!(matches!(
            rc_exact(&big),
            Err(SolverError::TooLarge { n: 11, limit: DEFAULT_ORDER_LIMIT })
        ));
        let cert = rc_exact_with(&big, &SolverOptions { effort_override: true }).unwrap();
        assert_eq!(cert.value, 6);
    }

    #[test]
    fn rc_exact_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(rc_exact(&g), Err(SolverError::Disconnected)));
    }
}
