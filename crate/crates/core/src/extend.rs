//! Extending a rainbow coloring over one attached vertex.
//!
//! Given a rainbow k-coloring of a connected graph on n vertices and a
//! set X of at least n+1-k attachment points, a new vertex P joined to
//! exactly X can always be colored with the existing k colors so that
//! the larger graph stays rainbow connected. The color of each new edge
//! P-x is chosen constructively:
//!
//! For each vertex y outside X, take a rainbow path from the anchor
//! (the smallest vertex of X) to y and keep its suffix from the last
//! X-vertex on the path. Suffixes sharing an origin x form a connected
//! origin subgraph. If fewer than k colors appear in it, P-x gets the
//! smallest absent color. Otherwise the subgraph is reduced edge by
//! edge (delete a duplicate-colored cycle edge, or contract a
//! duplicate-colored cut edge) until exactly k edges remain, all colors
//! distinct; one cycle edge is removed and its color goes to P-x.
//!
//! The choice is re-validated on the real extended graph by the
//! checker; a rejection is an anomaly and is reported with the full
//! instance instead of being patched up.

use thiserror::Error;

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::rainbow::{find_rainbow_path, is_rainbow_connected};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtendError {
    #[error("attachment set is empty")]
    AttachEmpty,
    #[error("attachment set has {attach} vertices, hypothesis needs at least {needed}")]
    AttachTooSmall { attach: usize, needed: usize },
    #[error("attachment vertex {vertex} out of range for n={n}")]
    AttachOutOfRange { vertex: usize, n: usize },
    #[error("the given coloring does not make the graph rainbow connected")]
    NotRainbow,
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error("extension anomaly ({detail}); instance: graph6={graph6} coloring:\n{coloring}")]
    Anomaly { detail: String, graph6: String, coloring: String },
}

/// A small mutable multigraph-free working copy of one origin subgraph.
/// Vertices carry their original labels; contractions merge labels.
#[derive(Clone)]
struct OriginSubgraph {
    /// Edges as (a, b, color), a and b current labels.
    edges: Vec<(usize, usize, u32)>,
}

impl OriginSubgraph {
    fn colors_present(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.edges.iter().map(|e| e.2).collect();
        cs.sort_unstable();
        cs.dedup();
        cs
    }

    fn duplicate_colors(&self) -> Vec<u32> {
        let mut cs: Vec<u32> = self.edges.iter().map(|e| e.2).collect();
        cs.sort_unstable();
        let mut dups = Vec::new();
        for w in cs.windows(2) {
            if w[0] == w[1] && dups.last() != Some(&w[0]) {
                dups.push(w[0]);
            }
        }
        dups
    }

    /// Is the edge at `idx` on a cycle, i.e. do its endpoints stay
    /// connected when it is removed?
    fn on_cycle(&self, idx: usize) -> bool {
        let (a, b, _) = self.edges[idx];
        let mut stack = vec![a];
        let mut seen = vec![a];
        while let Some(v) = stack.pop() {
            for (j, &(p, q, _)) in self.edges.iter().enumerate() {
                if j == idx {
                    continue;
                }
                let next = if p == v {
                    q
                } else if q == v {
                    p
                } else {
                    continue;
                };
                if !seen.contains(&next) {
                    if next == b {
                        return true;
                    }
                    seen.push(next);
                    stack.push(next);
                }
            }
        }
        false
    }

    /// Contracts the edge at `idx`: the larger endpoint label collapses
    /// into the smaller. Parallel edges must not arise (a contracted cut
    /// edge has no shared endpoint neighbors); the caller treats any
    /// that do as an anomaly.
    fn contract(&mut self, idx: usize) -> Result<(), String> {
        let (a, b, _) = self.edges.remove(idx);
        let (keep, gone) = if a < b { (a, b) } else { (b, a) };
        for e in &mut self.edges {
            if e.0 == gone {
                e.0 = keep;
            }
            if e.1 == gone {
                e.1 = keep;
            }
            if e.0 == e.1 {
                return Err(format!("contraction of ({a},{b}) created a self-loop"));
            }
        }
        let mut keys: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(p, q, _)| if p < q { (p, q) } else { (q, p) })
            .collect();
        keys.sort_unstable();
        for w in keys.windows(2) {
            if w[0] == w[1] {
                return Err(format!(
                    "contraction of ({a},{b}) created a parallel edge at {:?}",
                    w[0]
                ));
            }
        }
        Ok(())
    }
}

/// Picks a color for the new edge P-x from the origin subgraph of x,
/// following the constructive reduction. `k` is the color budget.
fn pick_color(mut sub: OriginSubgraph, k: u32) -> Result<u32, String> {
    let present = sub.colors_present();
    if (present.len() as u32) < k {
        // Smallest color of 1..=k not appearing near x.
        for c in 1..=k {
            if !present.contains(&c) {
                return Ok(c);
            }
        }
        unreachable!("fewer than k colors present implies an absent color");
    }
    // All k colors appear; reduce until exactly k edges remain. Each step
    // removes one edge, so the loop is bounded by the edge count.
    while sub.edges.len() as u32 > k {
        let dups = sub.duplicate_colors();
        if dups.is_empty() {
            return Err("more than k edges but no duplicate color".into());
        }
        let candidate = (0..sub.edges.len())
            .filter(|&i| dups.contains(&sub.edges[i].2))
            .find(|&i| sub.on_cycle(i));
        match candidate {
            Some(i) => {
                sub.edges.remove(i);
            }
            None => {
                // Every duplicate-colored edge is a cut edge; contract the
                // first one.
                let i = (0..sub.edges.len())
                    .find(|&i| dups.contains(&sub.edges[i].2))
                    .expect("duplicate color has an edge");
                sub.contract(i)?;
            }
        }
    }
    // Exactly k edges, all distinctly colored; removing a cycle edge
    // frees its color for P-x.
    match (0..sub.edges.len()).find(|&i| sub.on_cycle(i)) {
        Some(i) => Ok(sub.edges[i].2),
        None => Err("reduced subgraph with k edges has no cycle".into()),
    }
}

/// Adds a vertex adjacent to exactly `attach` and extends `c` over the
/// new edges without introducing new colors. Requires
/// `|attach| >= n + 1 - k`.
pub fn extend_rainbow_coloring(
    g: &Graph,
    c: &EdgeColoring,
    attach: &VertexSet,
) -> Result<(Graph, EdgeColoring), ExtendError> {
    c.check_bound(g).map_err(ExtendError::Coloring)?;
    let n = g.vertex_count();
    let k = c.k();
    if attach.is_empty() {
        return Err(ExtendError::AttachEmpty);
    }
    if let Some(v) = attach.iter().find(|&v| v >= n) {
        return Err(ExtendError::AttachOutOfRange { vertex: v, n });
    }
    let q = attach.len();
    let needed = (n + 1).saturating_sub(k as usize);
    if q < needed {
        return Err(ExtendError::AttachTooSmall { attach: q, needed });
    }
    if !is_rainbow_connected(g, c).map_err(ExtendError::Coloring)? {
        return Err(ExtendError::NotRainbow);
    }

    let p = n; // the new vertex
    let mut edges = g.edges();
    for x in attach.iter() {
        edges.push((x, p));
    }
    let g_prime = Graph::from_edges(n + 1, &edges).expect("extended graph is valid");

    // Suffix paths: for each y outside attach, walk a rainbow path from
    // the anchor and keep the part after the last attach vertex.
    let anchor = attach.min_vertex().expect("attach nonempty");
    let mut origin_edges: Vec<Vec<(usize, usize, u32)>> = vec![Vec::new(); n];
    for y in 0..n {
        if attach.contains(y) {
            continue;
        }
        let path = find_rainbow_path(g, c, anchor, y)
            .map_err(ExtendError::Coloring)?
            .expect("rainbow coloring connects every pair");
        let last_in_attach = path
            .iter()
            .rposition(|&(from, _)| attach.contains(from))
            .expect("path starts inside the attach set");
        let origin = path[last_in_attach].0;
        for &(a, b) in &path[last_in_attach..] {
            let color = c.color_of(a, b).expect("edge of g");
            let key = if a < b { (a, b, color) } else { (b, a, color) };
            if !origin_edges[origin].contains(&key) {
                origin_edges[origin].push(key);
            }
        }
    }

    let mut triples: Vec<(usize, usize, u32)> = c.triples().collect();
    for x in attach.iter() {
        let sub = OriginSubgraph { edges: origin_edges[x].clone() };
        match pick_color(sub, k) {
            Ok(color) => triples.push((x, p, color)),
            Err(detail) => {
                return Err(ExtendError::Anomaly {
                    detail,
                    graph6: to_graph6(&g_prime),
                    coloring: c.to_doc(),
                })
            }
        }
    }
    let c_prime = EdgeColoring::new(&g_prime, k, &triples).map_err(ExtendError::Coloring)?;
    match is_rainbow_connected(&g_prime, &c_prime) {
        Ok(true) => Ok((g_prime, c_prime)),
        Ok(false) => Err(ExtendError::Anomaly {
            detail: "extended coloring failed the checker".into(),
            graph6: to_graph6(&g_prime),
            coloring: c_prime.to_doc(),
        }),
        Err(e) => Err(ExtendError::Coloring(e)),
    }
}
