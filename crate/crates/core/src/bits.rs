//! Bitmask vertex sets and the subset orders used by the exact searches.

use crate::graph::{Graph, Vertex};

/// A vertex subset of a graph with at most 64 vertices.
pub type Mask = u64;

pub fn mask_of(vertices: &[Vertex]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn members(mut mask: Mask) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as Vertex);
        mask &= mask - 1;
    }
    out
}

pub fn full_mask(n: usize) -> Mask {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Adjacency rows as bitmasks.
#[derive(Clone, Debug)]
pub(crate) struct BitGraph {
    pub n: usize,
    pub adj: Vec<Mask>,
}

impl BitGraph {
    pub fn new(g: &Graph) -> Self {
        assert!(g.order() <= 64, "bitmask searches need at most 64 vertices");
        let adj = g.vertices().map(|v| mask_of(g.neighbors(v))).collect();
        Self { n: g.order(), adj }
    }

    pub fn full(&self) -> Mask {
        full_mask(self.n)
    }
}

/// k-subsets of `0..n` in lexicographic order of their sorted member lists.
pub struct LexSubsets {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for LexSubsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().fold(0, |m, &i| m | (1u64 << i));
        let k = self.idx.len();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// k-subsets of `0..n` in colexicographic (numeric) order, via Gosper's hack.
pub struct ColexSubsets {
    limit: Mask,
    cur: Option<Mask>,
}

impl ColexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        let cur = if k > n {
            None
        } else if k == 0 {
            Some(0)
        } else {
            Some(full_mask(k))
        };
        Self {
            limit: full_mask(n),
            cur,
        }
    }
}

impl Iterator for ColexSubsets {
    type Item = Mask;

    fn next(&mut self) -> Option<Mask> {
        let x = self.cur?;
        self.cur = if x == 0 {
            None
        } else {
            let c = x & x.wrapping_neg();
            let r = x.wrapping_add(c);
            if r == 0 {
                None
            } else {
                let next = (((r ^ x) >> 2) / c) | r;
                (next & !self.limit == 0).then_some(next)
            }
        };
        Some(x)
    }
}

/// Distances of a connected graph packed as bytes for the hot loops.
#[derive(Clone, Debug)]
pub(crate) struct DistTable {
    pub n: usize,
    pub d: Vec<u8>,
}

impl DistTable {
    pub fn new(dm: &crate::graph::DistanceMatrix) -> Self {
        let n = dm.order();
        let mut d = Vec::with_capacity(n * n);
        for u in 0..n {
            for &x in dm.row(u) {
                let x = x.expect("distance table requires a connected graph");
                d.push(u8::try_from(x).expect("distances fit in a byte for capped orders"));
            }
        }
        Self { n, d }
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    /// True iff the landmarks in `mask` give every vertex a distinct code.
    pub fn resolves(&self, mask: Mask, scratch: &mut Vec<(u64, u64, usize)>) -> bool {
        let landmarks = members(mask);
        scratch.clear();
        for v in 0..self.n {
            // two 64-bit words hold up to 16 byte-sized coordinates
            let (mut lo, mut hi) = (0u64, 0u64);
            let mut overflow = false;
            for (i, &w) in landmarks.iter().enumerate() {
                let x = u64::from(self.get(v, w));
                match i {
                    0..=7 => lo |= x << (8 * i),
                    8..=15 => hi |= x << (8 * (i - 8)),
                    _ => overflow = true,
                }
            }
            if overflow {
                return self.resolves_slow(&landmarks);
            }
            scratch.push((lo, hi, v));
        }
        scratch.sort_unstable();
        scratch
            .windows(2)
            .all(|p| (p[0].0, p[0].1) != (p[1].0, p[1].1))
    }

    fn resolves_slow(&self, landmarks: &[usize]) -> bool {
        let mut codes: Vec<Vec<u8>> = (0..self.n)
            .map(|v| landmarks.iter().map(|&w| self.get(v, w)).collect())
            .collect();
        codes.sort_unstable();
        codes.windows(2).all(|p| p[0] != p[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_of_three_subsets() {
        let got: Vec<Vec<usize>> = LexSubsets::new(4, 2).map(members).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(LexSubsets::new(3, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(LexSubsets::new(2, 3).count(), 0);
    }

    #[test]
    fn colex_matches_binomial_counts() {
        for n in 0..10 {
            for k in 0..=n {
                let all: Vec<Mask> = ColexSubsets::new(n, k).collect();
                let lex = LexSubsets::new(n, k).count();
                assert_eq!(all.len(), lex, "n={n} k={k}");
                assert!(all.windows(2).all(|p| p[0] < p[1]));
                assert!(all.iter().all(|m| m.count_ones() as usize == k));
            }
        }
    }

    #[test]
    fn members_round_trip() {
        assert_eq!(members(mask_of(&[0, 3, 5])), vec![0, 3, 5]);
        assert_eq!(full_mask(64), u64::MAX);
    }
}
