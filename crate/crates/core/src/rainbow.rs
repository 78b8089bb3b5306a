//! Rainbow connectivity checking.
//!
//! The checker runs, per source vertex, a breadth-first search over
//! `(vertex, used-color-set)` states; each state is expanded at most
//! once. A rainbow walk can always be shortcut to a rainbow path by
//! splicing out revisits, so state reachability decides path existence
//! exactly. Cost is exponential only in the number of colors, which
//! stays small at the scales this crate targets.

use crate::coloring::{ColoringError, EdgeColoring};
use crate::graph::{bit, low_mask, Graph};

/// Largest color count the state search accepts; 2^k states per vertex.
pub const MAX_CHECK_COLORS: u32 = 24;

/// Dense edge-color lookup: `matrix[u * n + v]` is the color of edge
/// `{u, v}`, or 0 when absent.
pub(crate) fn color_matrix(g: &Graph, c: &EdgeColoring) -> Vec<u32> {
    let n = g.vertex_count();
    let mut matrix = vec![0u32; n * n];
    for (u, v, color) in c.triples() {
        matrix[u * n + v] = color;
        matrix[v * n + u] = color;
    }
    matrix
}

/// Scratch buffers reused across sources and calls.
pub(crate) struct CheckScratch {
    /// Per vertex, a bitset over color masks already expanded.
    visited: Vec<Vec<u64>>,
    queue: Vec<(usize, u32)>,
}

impl CheckScratch {
    pub(crate) fn new() -> Self {
        CheckScratch { visited: Vec::new(), queue: Vec::new() }
    }

    fn reset(&mut self, n: usize, k: u32) {
        let words = (1usize << k).div_ceil(64);
        self.visited.resize(n, Vec::new());
        for row in &mut self.visited[..n] {
            row.clear();
            row.resize(words, 0);
        }
        self.queue.clear();
    }

    #[inline]
    fn mark(&mut self, v: usize, mask: u32) -> bool {
        let row = &mut self.visited[v];
        let word = &mut row[(mask >> 6) as usize];
        let b = 1u64 << (mask & 63);
        if *word & b != 0 {
            false
        } else {
            *word |= b;
            true
        }
    }
}

/// Core reachability test: can `src` reach every vertex of `targets`
/// by a rainbow path under the colors in `matrix`?
pub(crate) fn rainbow_reaches_all(
    g: &Graph,
    matrix: &[u32],
    k: u32,
    src: usize,
    targets: u64,
    scratch: &mut CheckScratch,
) -> bool {
    let n = g.vertex_count();
    scratch.reset(n, k);
    let mut remaining = targets & !bit(src);
    scratch.mark(src, 0);
    scratch.queue.push((src, 0));
    let mut head = 0;
    while head < scratch.queue.len() {
        let (v, mask) = scratch.queue[head];
        head += 1;
        let mut nb = g.adj_bits(v);
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let color = matrix[v * n + w];
            let color_bit = 1u32 << (color - 1);
            if mask & color_bit != 0 {
                continue;
            }
            let next = mask | color_bit;
            if scratch.mark(w, next) {
                remaining &= !bit(w);
                if remaining == 0 {
                    return true;
                }
                scratch.queue.push((w, next));
            }
        }
    }
    remaining == 0
}

/// Is `g` rainbow connected under `c`? Errors if the coloring is bound
/// to a different graph (or is too wide for the state search).
pub fn is_rainbow_connected(g: &Graph, c: &EdgeColoring) -> Result<bool, ColoringError> {
    c.check_bound(g)?;
    if c.k() > MAX_CHECK_COLORS {
        return Err(ColoringError::TooManyColors { k: c.k(), limit: MAX_CHECK_COLORS });
    }
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(true);
    }
    if !g.is_connected() {
        return Ok(false);
    }
    let matrix = color_matrix(g, c);
    let mut scratch = CheckScratch::new();
    let full = low_mask(n);
    // Rainbow paths are symmetric, so sources 0..n-1 against higher
    // vertices cover every pair.
    for src in 0..n - 1 {
        let targets = full & !low_mask(src + 1);
        if !rainbow_reaches_all(g, &matrix, c.k(), src, targets, &mut scratch) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds a rainbow `u`-`v` path, as a sequence of `(from, to)` steps.
/// Returns an empty path when `u == v`, `None` when no rainbow path
/// exists. The returned path is simple.
pub fn find_rainbow_path(
    g: &Graph,
    c: &EdgeColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<(usize, usize)>>, ColoringError> {
    c.check_bound(g)?;
    let n = g.vertex_count();
    if u >= n || v >= n {
        return Err(ColoringError::BadEndpoints { u, v });
    }
    if u == v {
        return Ok(Some(Vec::new()));
    }
    if c.k() > MAX_CHECK_COLORS {
        return Err(ColoringError::TooManyColors { k: c.k(), limit: MAX_CHECK_COLORS });
    }
    let matrix = color_matrix(g, c);

    // BFS with parent links over (vertex, mask) states.
    let mut parents: std::collections::HashMap<(usize, u32), (usize, u32)> =
        std::collections::HashMap::new();
    let mut scratch = CheckScratch::new();
    scratch.reset(n, c.k());
    scratch.mark(u, 0);
    scratch.queue.push((u, 0));
    let mut head = 0;
    let mut goal: Option<(usize, u32)> = None;
    'bfs: while head < scratch.queue.len() {
        let (x, mask) = scratch.queue[head];
        head += 1;
        let mut nb = g.adj_bits(x);
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let color = matrix[x * n + w];
            let color_bit = 1u32 << (color - 1);
            if mask & color_bit != 0 {
                continue;
            }
            let next = mask | color_bit;
            if scratch.mark(w, next) {
                parents.insert((w, next), (x, mask));
                if w == v {
                    goal = Some((w, next));
                    break 'bfs;
                }
                scratch.queue.push((w, next));
            }
        }
    }
    let Some(mut state) = goal else {
        return Ok(None);
    };
    let mut vertices = vec![state.0];
    while state != (u, 0) {
        state = parents[&state];
        vertices.push(state.0);
    }
    vertices.reverse();

    // Splice out any revisits so the walk becomes a simple path. The
    // remaining colors are a subset, so the path stays rainbow.
    let mut simple: Vec<usize> = Vec::with_capacity(vertices.len());
    for x in vertices {
        if let Some(pos) = simple.iter().position(|&y| y == x) {
            simple.truncate(pos);
        }
        simple.push(x);
    }
    Ok(Some(simple.windows(2).map(|w| (w[0], w[1])).collect()))
}
