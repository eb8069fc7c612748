//! Slow, direct implementations used as independent oracles.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use dimforce_core::Graph;
use itertools::Itertools;

pub fn bfs_distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![usize::MAX; n];
            d[s] = 0;
            let mut q = VecDeque::from([s]);
            while let Some(x) = q.pop_front() {
                for &y in g.neighbors(x) {
                    if d[y] == usize::MAX {
                        d[y] = d[x] + 1;
                        q.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn resolves(d: &[Vec<usize>], w: &[usize]) -> bool {
    let codes: HashSet<Vec<usize>> = (0..d.len())
        .map(|v| w.iter().map(|&x| d[v][x]).collect())
        .collect();
    codes.len() == d.len()
}

pub fn dim(g: &Graph) -> usize {
    let d = bfs_distances(g);
    (1..=g.order())
        .find(|&k| (0..g.order()).combinations(k).any(|w| resolves(&d, &w)))
        .unwrap()
}

/// Applies the colour-change rule one force at a time until nothing changes.
pub fn closure(g: &Graph, s: &[usize]) -> Vec<bool> {
    let mut black = vec![false; g.order()];
    for &v in s {
        black[v] = true;
    }
    loop {
        let force = (0..g.order()).filter(|&u| black[u]).find_map(|u| {
            let white: Vec<usize> = g
                .neighbors(u)
                .iter()
                .copied()
                .filter(|&w| !black[w])
                .collect();
            (white.len() == 1).then(|| white[0])
        });
        match force {
            Some(w) => black[w] = true,
            None => return black,
        }
    }
}

pub fn forces(g: &Graph, s: &[usize]) -> bool {
    closure(g, s).into_iter().all(|b| b)
}

pub fn zero_forcing(g: &Graph) -> usize {
    (1..=g.order())
        .find(|&k| (0..g.order()).combinations(k).any(|s| forces(g, &s)))
        .unwrap()
}

fn induces_path(g: &Graph, block: &[usize]) -> bool {
    let inside = |v: usize| block.contains(&v);
    let degs: Vec<usize> = block
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside(w)).count())
        .collect();
    let edges: usize = degs.iter().sum::<usize>() / 2;
    if edges + 1 != block.len() || degs.iter().any(|&d| d > 2) {
        return false;
    }
    // connected: walk from the first vertex
    let mut seen = vec![block[0]];
    let mut i = 0;
    while i < seen.len() {
        for &w in g.neighbors(seen[i]) {
            if inside(w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == block.len()
}

/// Minimum over every set partition of the vertex set.
pub fn path_cover(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, blocks: &mut Vec<Vec<usize>>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.order() {
            if blocks.iter().all(|b| induces_path(g, b)) {
                *best = blocks.len();
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(v);
            go(g, v + 1, blocks, best);
            blocks[i].pop();
        }
        blocks.push(vec![v]);
        go(g, v + 1, blocks, best);
        blocks.pop();
    }
    let mut best = g.order() + 1;
    go(g, 0, &mut Vec::new(), &mut best);
    best
}

/// True twins or false twins: N(u) \ {v} = N(v) \ {u}.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let a: HashSet<usize> = g.neighbors(u).iter().copied().filter(|&x| x != v).collect();
            let b: HashSet<usize> = g.neighbors(v).iter().copied().filter(|&x| x != u).collect();
            if a == b {
                out.push((u, v));
            }
        }
    }
    out
}
