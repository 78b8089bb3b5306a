//! Edge colorings and their interchange format.
//!
//! A coloring is a total map from the edges of one specific graph to
//! colors `1..=k`. The text document format is line-based:
//!
//! ```text
//! n 6
//! k 3
//! 0 1 1
//! 0 2 2
//! ...
//! ```
//!
//! with one `u v color` triple per edge, vertices 0-based, colors
//! 1-based, edges sorted by `(u, v)`. Emission is canonical, so
//! parse/emit round-trips are bit-exact.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring is bound to a different graph")]
    GraphMismatch,
    #[error("color {color} on edge ({u}, {v}) outside 1..={k}")]
    ColorOutOfRange { u: usize, v: usize, color: u32, k: u32 },
    #[error("edge ({u}, {v}) of the graph has no color")]
    MissingEdge { u: usize, v: usize },
    #[error("({u}, {v}) is not an edge of the bound graph")]
    UnknownEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) colored twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("invalid endpoints ({u}, {v})")]
    BadEndpoints { u: usize, v: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("checker supports at most {limit} colors, coloring has k={k}")]
    TooManyColors { k: u32, limit: u32 },
}

/// A total assignment of colors `1..=k` to the edges of one graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    n: usize,
    k: u32,
    /// Sorted `(u, v)` with `u < v`; must equal the bound graph's edges.
    edges: Vec<(usize, usize)>,
    colors: Vec<u32>,
}

impl EdgeColoring {
    /// Builds a coloring for `g` from explicit triples. Every edge of `g`
    /// must appear exactly once and every color must lie in `1..=k`.
    pub fn new(
        g: &Graph,
        k: u32,
        triples: &[(usize, usize, u32)],
    ) -> Result<EdgeColoring, ColoringError> {
        let edges = g.edges();
        let mut colors = vec![0u32; edges.len()];
        for &(a, b, color) in triples {
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if u == v || v >= g.vertex_count() {
                return Err(ColoringError::BadEndpoints { u: a, v: b });
            }
            let slot = edges
                .binary_search(&(u, v))
                .map_err(|_| ColoringError::UnknownEdge { u, v })?;
            if colors[slot] != 0 {
                return Err(ColoringError::DuplicateEdge { u, v });
            }
            if color == 0 || color > k {
                return Err(ColoringError::ColorOutOfRange { u, v, color, k });
            }
            colors[slot] = color;
        }
        if let Some(slot) = colors.iter().position(|&c| c == 0) {
            let (u, v) = edges[slot];
            return Err(ColoringError::MissingEdge { u, v });
        }
        Ok(EdgeColoring { n: g.vertex_count(), k, edges, colors })
    }

    /// All edges of `g` in a single color.
    pub fn constant(g: &Graph, k: u32, color: u32) -> Result<EdgeColoring, ColoringError> {
        let triples: Vec<_> = g.edges().iter().map(|&(u, v)| (u, v, color)).collect();
        EdgeColoring::new(g, k, &triples)
    }

    /// Internal constructor from a color slice parallel to `g.edges()`.
    pub(crate) fn from_slots(g: &Graph, k: u32, colors: Vec<u32>) -> EdgeColoring {
        let edges = g.edges();
        debug_assert_eq!(edges.len(), colors.len());
        debug_assert!(colors.iter().all(|&c| c >= 1 && c <= k));
        EdgeColoring { n: g.vertex_count(), k, edges, colors }
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True when this coloring is bound to exactly this graph.
    pub fn matches(&self, g: &Graph) -> bool {
        self.n == g.vertex_count() && self.edges == g.edges()
    }

    pub(crate) fn check_bound(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.matches(g) {
            Ok(())
        } else {
            Err(ColoringError::GraphMismatch)
        }
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<u32> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok().map(|slot| self.colors[slot])
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.edges
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
    }

    /// Number of distinct colors actually used.
    pub fn used_colors(&self) -> u32 {
        let mut seen: Vec<u32> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len() as u32
    }

    /// Canonical text document for this coloring.
    pub fn to_doc(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "k {}", self.k);
        for (u, v, c) in self.triples() {
            let _ = writeln!(out, "{u} {v} {c}");
        }
        out
    }

    /// Parses a coloring document. The result is bound to the edge set
    /// listed in the document; use [`EdgeColoring::matches`] to verify the
    /// binding against a graph.
    pub fn parse_doc(text: &str) -> Result<EdgeColoring, ColoringError> {
        let err = |line: usize, message: &str| ColoringError::Parse {
            line,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate();

        let (idx, first) = lines.next().ok_or_else(|| err(1, "missing 'n' line"))?;
        let n: usize = first
            .strip_prefix("n ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| err(idx + 1, "expected 'n <count>'"))?;

        let (idx, second) = lines.next().ok_or_else(|| err(2, "missing 'k' line"))?;
        let k: u32 = second
            .strip_prefix("k ")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| err(idx + 1, "expected 'k <colors>'"))?;

        let mut triples: Vec<(usize, usize, u32)> = Vec::new();
        for (idx, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let mut it = line.split_ascii_whitespace();
            let parse3 = (|| {
                let u: usize = it.next()?.parse().ok()?;
                let v: usize = it.next()?.parse().ok()?;
                let c: u32 = it.next()?.parse().ok()?;
                if it.next().is_some() {
                    return None;
                }
                Some((u, v, c))
            })();
            let (u, v, c) = parse3.ok_or_else(|| err(idx + 1, "expected 'u v color'"))?;
            if u == v || u >= n || v >= n {
                return Err(ColoringError::BadEndpoints { u, v });
            }
            if c == 0 || c > k {
                return Err(ColoringError::ColorOutOfRange { u, v, color: c, k });
            }
            triples.push((u.min(v), u.max(v), c));
        }
        triples.sort_unstable();
        for w in triples.windows(2) {
            if w[0].0 == w[1].0 && w[0].1 == w[1].1 {
                return Err(ColoringError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let edges: Vec<_> = triples.iter().map(|&(u, v, _)| (u, v)).collect();
        let colors: Vec<_> = triples.iter().map(|&(_, _, c)| c).collect();
        Ok(EdgeColoring { n, k, edges, colors })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let p4 = Graph::path(4).unwrap();
        let c = EdgeColoring::new(&p4, 3, &[(0, 1, 1), (1, 2, 2), (2, 3, 3)]).unwrap();
        assert_eq!(c.color_of(1, 2), Some(2));
        assert_eq!(c.color_of(2, 1), Some(2));
        assert_eq!(c.color_of(0, 2), None);
        assert_eq!(c.used_colors(), 3);
        assert!(c.matches(&p4));
        assert!(!c.matches(&Graph::star(4).unwrap()));
    }

    #[test]
    fn rejects_bad_triples() {
        let p4 = Graph::path(4).unwrap();
        assert!(matches!(
            EdgeColoring::new(&p4, 2, &[(0, 1, 1), (1, 2, 2)]),
            Err(ColoringError::MissingEdge { u: 2, v: 3 })
        ));
        assert!(matches!(
            EdgeColoring::new(&p4, 2, &[(0, 1, 3), (1, 2, 1), (2, 3, 1)]),
            Err(ColoringError::ColorOutOfRange { color: 3, .. })
        ));
        assert!(matches!(
            EdgeColoring::new(&p4, 2, &[(0, 2, 1), (0, 1, 1), (1, 2, 1), (2, 3, 1)]),
            Err(ColoringError::UnknownEdge { u: 0, v: 2 })
        ));
        assert!(matches!(
            EdgeColoring::new(&p4, 2, &[(0, 1, 1), (1, 0, 2), (1, 2, 1), (2, 3, 1)]),
            Err(ColoringError::DuplicateEdge { u: 0, v: 1 })
        ));
    }

    #[test]
    fn doc_roundtrip_is_bit_exact() {
        let c6 = Graph::cycle(6).unwrap();
        let triples: Vec<_> = c6
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, (i % 3 + 1) as u32))
            .collect();
        let c = EdgeColoring::new(&c6, 3, &triples).unwrap();
        let doc = c.to_doc();
        let parsed = EdgeColoring::parse_doc(&doc).unwrap();
        assert_eq!(parsed, c);
        assert_eq!(parsed.to_doc(), doc);
    }

    #[test]
    fn doc_parse_errors_carry_line_numbers() {
        assert!(matches!(
            EdgeColoring::parse_doc("x 4\n"),
            Err(ColoringError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            EdgeColoring::parse_doc("n 4\nq 2\n"),
            Err(ColoringError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            EdgeColoring::parse_doc("n 4\nk 2\n0 1\n"),
            Err(ColoringError::Parse { line: 3, .. })
        ));
    }
}
