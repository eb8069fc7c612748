//! Minimum covers of the vertex set by disjoint induced paths.

use serde::Serialize;

use crate::bits::{full_mask, mask_of, members, BitGraph, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest order [`path_cover_bruteforce`] accepts unless told otherwise.
pub const DEFAULT_PATH_COVER_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathCover {
    /// Sorted blocks, ordered by least vertex.
    pub blocks: Vec<Vec<Vertex>>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Blocks partition the vertex set and each induces a path.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.order()];
        for block in &self.blocks {
            for &v in block {
                if v >= g.order() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
            if !induces_path(g, block) {
                return false;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Whether `vertices` induces a path (connected, acyclic, maximum degree two).
pub fn induces_path(g: &Graph, vertices: &[Vertex]) -> bool {
    if vertices.is_empty() {
        return false;
    }
    let h = g.induced(vertices);
    h.is_connected() && h.size() + 1 == h.order() && h.max_degree() <= 2
}

/// Endpoints of an induced path block: one vertex for a single-vertex block.
pub fn block_endpoints(g: &Graph, block: &[Vertex]) -> Vec<Vertex> {
    let set = mask_of(block);
    let mut ends: Vec<Vertex> = block
        .iter()
        .copied()
        .filter(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| set & (1 << w) != 0)
                .count()
                <= 1
        })
        .collect();
    ends.sort_unstable();
    ends
}

/// Every vertex subset inducing a path, grouped by least vertex.
fn induced_paths(bg: &BitGraph) -> Vec<Vec<Mask>> {
    let mut by_min = vec![Vec::new(); bg.n];
    // grow paths from an endpoint; each path is found from both ends, so keep
    // the copy whose start is the smaller endpoint
    fn grow(bg: &BitGraph, start: usize, tail: usize, set: Mask, out: &mut Vec<Mask>) {
        if tail == start || start < tail {
            out.push(set);
        }
        let mut cand = bg.adj[tail] & !set;
        while cand != 0 {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            // w may touch only the current tail within the path
            if bg.adj[w] & set == 1 << tail {
                grow(bg, start, w, set | (1 << w), out);
            }
        }
    }
    let mut all = Vec::new();
    for s in 0..bg.n {
        grow(bg, s, s, 1 << s, &mut all);
    }
    for set in all {
        by_min[set.trailing_zeros() as usize].push(set);
    }
    for list in &mut by_min {
        list.sort_unstable_by_key(|&m| members(m));
        list.dedup();
    }
    by_min
}

pub fn path_cover_bruteforce(g: &Graph) -> Result<PathCover> {
    path_cover_with_cap(g, DEFAULT_PATH_COVER_CAP)
}

/// Exact P(G). Subsets are solved bottom-up, always covering the least
/// uncovered vertex; the witness takes, at each step, the lexicographically
/// least block that keeps the count optimal.
pub fn path_cover_with_cap(g: &Graph, cap: usize) -> Result<PathCover> {
    let n = g.order();
    if n > cap || n > 26 {
        return Err(Error::CapExceeded {
            what: "path cover search",
            n,
            cap: cap.min(26),
        });
    }
    if n == 0 {
        return Ok(PathCover { blocks: Vec::new() });
    }
    let bg = BitGraph::new(g);
    let paths = induced_paths(&bg);
    let full = full_mask(n);
    let mut best = vec![u8::MAX; (full as usize) + 1];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask.trailing_zeros() as usize;
        let mut b = u8::MAX;
        for &p in &paths[low] {
            if p & !mask == 0 {
                b = b.min(best[(mask & !p) as usize].saturating_add(1));
            }
        }
        best[mask as usize] = b;
    }
    let mut blocks = Vec::new();
    let mut rest = full;
    while rest != 0 {
        let low = rest.trailing_zeros() as usize;
        let target = best[rest as usize] - 1;
        let p = *paths[low]
            .iter()
            .find(|&&p| p & !rest == 0 && best[(rest & !p) as usize] == target)
            .expect("optimal block exists");
        blocks.push(members(p));
        rest &= !p;
    }
    Ok(PathCover { blocks })
}
