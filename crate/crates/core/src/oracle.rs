//! Brute-force girth measurement on expanded 0/1 matrices.
//!
//! Everything here works directly on the bipartite Tanner graph of a
//! `BinaryMatrix` — variable nodes are columns, check nodes are rows, and
//! each 1-entry is an edge. Nothing in this module knows how the matrix was
//! constructed, which is what makes it an independent referee for the
//! closed-form classification: the two sides can only agree because both
//! are right.
//!
//! Cycles are counted the way iterative-decoding analysis counts them: a
//! cycle of length `2k` is a closed walk through `2k` pairwise-distinct
//! edges, alternating between variable and check nodes. Vertices may
//! repeat; edges may not. The shortest such walk is always a simple cycle,
//! so the girth computed from simple cycles and from edge-distinct walks
//! coincide; for lengths above the girth the two notions differ, and
//! [`has_cycle_of_length`] implements the edge-distinct-walk semantics.

use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;

/// Adjacency view of a parity-check matrix. Node ids: variables (columns)
/// come first, `0..vars`, then checks (rows), `vars..vars + checks`.
pub struct TannerGraph {
    vars: usize,
    checks: usize,
    adj: Vec<Vec<usize>>,
}

impl TannerGraph {
    pub fn new(h: &BinaryMatrix) -> Self {
        let vars = h.cols();
        let checks = h.rows();
        let mut adj = vec![Vec::new(); vars + checks];
        for r in 0..checks {
            for c in h.row_support(r) {
                adj[c].push(vars + r);
                adj[vars + r].push(c);
            }
        }
        TannerGraph { vars, checks, adj }
    }

    /// Number of variable nodes (matrix columns).
    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Number of check nodes (matrix rows).
    pub fn checks(&self) -> usize {
        self.checks
    }

    /// Neighbors of a node id.
    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adj[node]
    }

    fn node_count(&self) -> usize {
        self.vars + self.checks
    }
}

/// The girth of the Tanner graph, `None` when it is acyclic.
///
/// Breadth-first search from every variable node; a non-tree edge between
/// `u` and `w` witnesses a closed walk of length `dist(u) + dist(w) + 1`,
/// and for a root lying on a shortest cycle the first such witness has
/// exactly the girth length, so the minimum over all roots is exact. Every
/// cycle passes through a variable node, so variable roots suffice.
pub fn girth(h: &BinaryMatrix) -> Option<usize> {
    let g = TannerGraph::new(h);
    let n = g.node_count();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();

    for root in 0..g.vars() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        queue.clear();
        dist[root] = 0;
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            if let Some(b) = best {
                // Any candidate found from here on has length ≥ 2·dist(u)+1.
                if 2 * dist[u] + 1 >= b {
                    break 'bfs;
                }
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let candidate = dist[u] + dist[w] + 1;
                    if best.is_none_or(|b| candidate < b) {
                        best = Some(candidate);
                    }
                }
            }
        }
    }
    best
}

/// Whether the Tanner graph has a cycle of exactly the given length, in the
/// edge-distinct-closed-walk sense described at module level.
///
/// Only the even lengths 4–12 are supported; anything else is an error.
/// Exhaustive depth-first search over edge-simple walks, canonicalized so
/// each walk is sought from its least variable node, with shortest-distance
/// pruning back to the start.
pub fn has_cycle_of_length(h: &BinaryMatrix, len: usize) -> Result<bool> {
    if !(4..=12).contains(&len) || len % 2 != 0 {
        return Err(Error::UnsupportedCycleLength(len));
    }
    let g = TannerGraph::new(h);
    let n = g.node_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let mut used = vec![false; g.vars() * g.checks()];

    for start in 0..g.vars() {
        // Distances back to the start on the full graph: a lower bound for
        // walks restricted to variables ≥ start, hence a sound prune.
        dist.fill(usize::MAX);
        queue.clear();
        dist[start] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            if dist[u] >= len {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        if walk_search(&g, &dist, &mut used, start, start, 0, len) {
            return Ok(true);
        }
        debug_assert!(used.iter().all(|&u| !u));
    }
    Ok(false)
}

/// Extends an edge-simple walk from `u` (at `depth` edges from `start`)
/// and reports whether it can close at `start` in exactly `len` edges.
fn walk_search(
    g: &TannerGraph,
    dist: &[usize],
    used: &mut [bool],
    start: usize,
    u: usize,
    depth: usize,
    len: usize,
) -> bool {
    for &w in g.neighbors(u) {
        // Walks are canonicalized to start at their least variable node.
        if w < g.vars() && w < start {
            continue;
        }
        let remaining = len - depth - 1;
        if dist[w] == usize::MAX || dist[w] > remaining {
            continue;
        }
        let edge = edge_id(g, u, w);
        if used[edge] {
            continue;
        }
        if remaining == 0 {
            if w == start {
                return true;
            }
            continue;
        }
        used[edge] = true;
        let found = walk_search(g, dist, used, start, w, depth + 1, len);
        used[edge] = false;
        if found {
            return true;
        }
    }
    false
}

fn edge_id(g: &TannerGraph, u: usize, w: usize) -> usize {
    let (var, check) = if u < g.vars() { (u, w) } else { (w, u) };
    (check - g.vars()) * g.vars() + var
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ones(rows: usize, cols: usize, bits: &[(usize, usize)]) -> BinaryMatrix {
        BinaryMatrix::from_ones(rows, cols, bits.iter().copied()).unwrap()
    }

    #[test]
    fn all_ones_2x2_has_girth_4() {
        let h = ones(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(girth(&h), Some(4));
    }

    #[test]
    fn hexagon_has_girth_6() {
        // Each row and column has weight 2; the graph is a single 6-cycle.
        let h = ones(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2)]);
        assert_eq!(girth(&h), Some(6));
        assert_eq!(has_cycle_of_length(&h, 6), Ok(true));
        assert_eq!(has_cycle_of_length(&h, 4), Ok(false));
        // Only 6 edges exist, so no longer edge-distinct walk fits.
        assert_eq!(has_cycle_of_length(&h, 8), Ok(false));
        assert_eq!(has_cycle_of_length(&h, 12), Ok(false));
    }

    #[test]
    fn forests_have_no_girth() {
        assert_eq!(girth(&BinaryMatrix::zero(4, 6)), None);
        // A star: one variable joined to three checks.
        assert_eq!(girth(&ones(3, 1, &[(0, 0), (1, 0), (2, 0)])), None);
        // An identity matrix is a perfect matching.
        let id = ones(4, 4, &[(0, 0), (1, 1), (2, 2), (3, 3)]);
        assert_eq!(girth(&id), None);
        assert_eq!(has_cycle_of_length(&id, 4), Ok(false));
    }

    #[test]
    fn figure_eight_counts_as_an_eight_cycle() {
        // Two 4-cycles sharing check node 1:
        // vars 0,1 ↔ checks 0,1 and vars 2,3 ↔ checks 1,2.
        let h = ones(
            3,
            4,
            &[
                (0, 0),
                (0, 1),
                (1, 0),
                (1, 1),
                (1, 2),
                (1, 3),
                (2, 2),
                (2, 3),
            ],
        );
        assert_eq!(girth(&h), Some(4));
        assert_eq!(has_cycle_of_length(&h, 4), Ok(true));
        // No simple 8-cycle exists, but the edge-distinct walk through both
        // squares does.
        assert_eq!(has_cycle_of_length(&h, 8), Ok(true));
        assert_eq!(has_cycle_of_length(&h, 6), Ok(false));
    }

    #[test]
    fn unsupported_lengths_are_errors() {
        let h = ones(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        for len in [0, 2, 3, 5, 7, 13, 14] {
            assert!(matches!(
                has_cycle_of_length(&h, len),
                Err(Error::UnsupportedCycleLength(l)) if l == len
            ));
        }
    }

    #[test]
    fn girth_is_invariant_under_relabeling_and_transpose() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4001);
        for _ in 0..30 {
            let rows = rng.gen_range(2..=10);
            let cols = rng.gen_range(2..=10);
            let mut h = BinaryMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.35) {
                        h.set(r, c, true);
                    }
                }
            }
            let g0 = girth(&h);
            assert_eq!(girth(&h.transpose()), g0);

            let mut row_perm: Vec<usize> = (0..rows).collect();
            let mut col_perm: Vec<usize> = (0..cols).collect();
            row_perm.shuffle(&mut rng);
            col_perm.shuffle(&mut rng);
            let mut shuffled = BinaryMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if h.get(r, c) {
                        shuffled.set(row_perm[r], col_perm[c], true);
                    }
                }
            }
            assert_eq!(girth(&shuffled), g0);
        }
    }

    #[test]
    fn girth_agrees_with_walk_search_on_random_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_4002);
        for _ in 0..40 {
            let rows = rng.gen_range(2..=7);
            let cols = rng.gen_range(2..=7);
            let mut h = BinaryMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.4) {
                        h.set(r, c, true);
                    }
                }
            }
            let g = girth(&h);
            // The shortest cycle must also be found by the exact-length
            // search, and no shorter length may be reported present.
            for len in [4usize, 6, 8, 10, 12] {
                let present = has_cycle_of_length(&h, len).unwrap();
                match g {
                    Some(girth_len) if len < girth_len => assert!(!present),
                    Some(girth_len) if len == girth_len => assert!(present),
                    None => assert!(!present),
                    _ => {}
                }
            }
        }
    }
}
