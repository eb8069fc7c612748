//! A resolving set for T + e with at most dim(T) + 1 vertices.
//!
//! For a path the two end-vertices suffice. Otherwise the tree basis is split
//! by the cycle-rooted subtree each landmark falls in, and one cycle vertex
//! `b0` is added so that three of the landmarks sit in distinct subtrees, two
//! of them rooted at cycle vertices ⌊k/2⌋ apart. Every landmark set that
//! meets the cycle this way strongly resolves it, which keeps vertices of
//! different subtrees apart; vertices inside one subtree are already kept
//! apart by the tree basis.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{unique_cycle, DistanceMatrix, Graph, Vertex};
use crate::profile::structural_profile;
use crate::resolve::is_resolving;
use crate::tree::tree_basis_construction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionRule {
    /// T is a path: its two end-vertices.
    PathEnds,
    /// All landmarks hang off one cycle vertex; a cycle neighbour is added.
    SingleSubtree,
    /// As `SingleSubtree`, but neither cycle neighbour resolves; the least
    /// vertex outside the landmarks' subtree that does is added instead.
    SingleSubtreeSearch,
    /// Two non-empty sub-bases are rooted ⌊k/2⌋ apart on the cycle.
    DiametralPair,
    /// `b0` is the cycle vertex ⌊k/2⌋ steps after the first non-empty root.
    OppositeRoot,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicConstruction {
    pub resolving_set: Vec<Vertex>,
    pub cycle: Vec<Vertex>,
    pub rule: ConstructionRule,
    /// Three landmarks in distinct cycle-rooted subtrees, when the rule uses them.
    pub anchors: Option<[Vertex; 3]>,
    pub added: Option<Vertex>,
}

/// For each vertex, the cycle vertex its subtree hangs from.
pub fn subtree_roots(g: &Graph, cycle: &[Vertex]) -> Vec<Vertex> {
    let mut root = vec![usize::MAX; g.order()];
    let mut queue = VecDeque::new();
    for &c in cycle {
        root[c] = c;
        queue.push_back(c);
    }
    while let Some(x) = queue.pop_front() {
        for &w in g.neighbors(x) {
            if root[w] == usize::MAX {
                root[w] = root[x];
                queue.push_back(w);
            }
        }
    }
    root
}

pub fn unicyclic_resolving_construction(
    t: &Graph,
    e: (Vertex, Vertex),
) -> Result<UnicyclicConstruction> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let g = t.with_edge(e.0, e.1)?;
    let cycle = unique_cycle(&g)?;

    if t.is_path() {
        let ends: Vec<Vertex> = t.vertices().filter(|&v| t.degree(v) == 1).collect();
        return Ok(UnicyclicConstruction {
            resolving_set: ends,
            cycle,
            rule: ConstructionRule::PathEnds,
            anchors: None,
            added: None,
        });
    }

    let basis = tree_basis_construction(t, &structural_profile(t, &DistanceMatrix::new(t)))?;
    let k = cycle.len();
    let m = k / 2;
    let roots = subtree_roots(&g, &cycle);
    let mut position = vec![usize::MAX; g.order()];
    for (i, &c) in cycle.iter().enumerate() {
        position[c] = i;
    }
    // least landmark of each non-empty sub-basis, by cycle position
    let mut sub_min = vec![None; k];
    for &b in &basis {
        let p = position[roots[b]];
        sub_min[p] = Some(sub_min[p].map_or(b, |x: Vertex| x.min(b)));
    }
    let occupied: Vec<usize> = (0..k).filter(|&i| sub_min[i].is_some()).collect();
    let with = |extra: Vertex| {
        let mut s = basis.clone();
        if !s.contains(&extra) {
            s.push(extra);
            s.sort_unstable();
        }
        s
    };

    if occupied.len() == 1 {
        let a = occupied[0];
        let dm = DistanceMatrix::new(&g);
        let forward = cycle[(a + 1) % k];
        let backward = cycle[(a + k - 1) % k];
        let (added, rule) = if is_resolving(&dm, &with(forward)) {
            (forward, ConstructionRule::SingleSubtree)
        } else if is_resolving(&dm, &with(backward)) {
            (backward, ConstructionRule::SingleSubtree)
        } else {
            let found = g
                .vertices()
                .find(|&x| roots[x] != cycle[a] && is_resolving(&dm, &with(x)));
            // keep the cycle neighbour when nothing resolves so callers see the failure
            (
                found.unwrap_or(forward),
                ConstructionRule::SingleSubtreeSearch,
            )
        };
        return Ok(UnicyclicConstruction {
            resolving_set: with(added),
            cycle,
            rule,
            anchors: None,
            added: Some(added),
        });
    }

    let cyc_dist = |i: usize, j: usize| {
        let d = i.abs_diff(j);
        d.min(k - d)
    };
    let pair = occupied.iter().enumerate().find_map(|(a, &i)| {
        occupied[a + 1..]
            .iter()
            .find(|&&j| cyc_dist(i, j) == m)
            .map(|&j| (i, j))
    });

    let (rule, b0, anchors) = match pair {
        Some((i, j)) => {
            let b0 = *cycle
                .iter()
                .filter(|&&c| c != cycle[i] && c != cycle[j])
                .min()
                .expect("cycles have at least three vertices");
            let anchors = [sub_min[i].unwrap(), sub_min[j].unwrap(), b0];
            (ConstructionRule::DiametralPair, b0, anchors)
        }
        None => {
            let first = occupied[0];
            let opposite = (first + m) % k;
            let s = *occupied
                .iter()
                .find(|&&p| p != first && p != opposite)
                .expect("a second non-empty sub-basis away from the opposite root");
            let b0 = cycle[opposite];
            let anchors = [sub_min[first].unwrap(), b0, sub_min[s].unwrap()];
            (ConstructionRule::OppositeRoot, b0, anchors)
        }
    };
    Ok(UnicyclicConstruction {
        resolving_set: with(b0),
        cycle,
        rule,
        anchors: Some(anchors),
        added: Some(b0),
    })
}
