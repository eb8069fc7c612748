//! Exhaustive generation of small trees and connected graphs.

use std::collections::BTreeMap;

use crate::bits::members;
use crate::canon::{canonical_form, canonical_graph, canonical_tree, tree_code, MAX_CANON_ORDER};
use crate::graph::Graph;

/// One representative per isomorphism class of trees on `n` vertices, each
/// canonically labelled, ordered by canonical code.
pub fn trees(n: usize) -> Vec<Graph> {
    match n {
        0 => return Vec::new(),
        1 => return vec![Graph::empty(1)],
        _ => {}
    }
    let mut level = vec![Graph::empty(1)];
    for size in 2..=n {
        let mut seen: BTreeMap<String, Graph> = BTreeMap::new();
        for t in &level {
            for v in t.vertices() {
                let grown = Graph::new(size, t.edges().iter().copied().chain([(v, size - 1)]))
                    .expect("new leaf edge is valid");
                let (code, _) = tree_code(&grown);
                seen.entry(code).or_insert_with(|| canonical_tree(&grown));
            }
        }
        level = seen.into_values().collect();
    }
    level
}

/// Every graph on `n` vertices up to isomorphism, canonically labelled.
pub fn graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_CANON_ORDER,
        "isomorphism classes are enumerated up to {MAX_CANON_ORDER} vertices"
    );
    let mut level = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen: BTreeMap<u128, Graph> = BTreeMap::new();
        for g in &level {
            for nbrs in 0..(1u64 << (size - 1)) {
                let edges = g
                    .edges()
                    .iter()
                    .copied()
                    .chain(members(nbrs).into_iter().map(|v| (v, size - 1)));
                let h = Graph::new(size, edges).expect("augmented edges are valid");
                let (code, perm) = canonical_form(&h);
                seen.entry(code).or_insert_with(|| h.relabel(&perm));
            }
        }
        level = seen.into_values().collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Every labelled connected graph on `n` vertices, in order of edge bitmask.
pub fn labeled_connected_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    assert!(
        pairs.len() <= 24,
        "labelled enumeration is limited to 7 vertices"
    );
    (0u64..(1 << pairs.len()))
        .map(|mask| {
            Graph::new(n, members(mask).into_iter().map(|i| pairs[i])).expect("pairs are valid")
        })
        .filter(Graph::is_connected)
        .collect()
}

/// Canonical representatives of a corpus, first occurrence kept.
pub fn dedup_isomorphic(corpus: Vec<Graph>) -> Vec<Graph> {
    let mut seen = std::collections::BTreeSet::new();
    corpus
        .into_iter()
        .filter(|g| g.order() > MAX_CANON_ORDER || seen.insert((g.order(), canonical_form(g).0)))
        .map(|g| {
            if g.order() <= MAX_CANON_ORDER {
                canonical_graph(&g)
            } else {
                g
            }
        })
        .collect()
}
