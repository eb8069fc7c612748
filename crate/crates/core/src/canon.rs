//! Canonical labellings for small graphs and for trees.
//!
//! Graphs: vertices are coloured by iterated degree refinement, then every
//! permutation that keeps colour classes in colour order is tried and the
//! one giving the greatest upper-triangle adjacency string wins. The colouring
//! depends only on isomorphism-invariant data, so the result is canonical.
//!
//! Trees: rooted at the centre (or the better of two centres) and encoded by
//! sorted nested parenthesis strings.

use std::collections::BTreeMap;

use crate::graph::{Graph, Vertex};

/// Largest order accepted by [`canonical_form`]; the code must fit 128 bits.
pub const MAX_CANON_ORDER: usize = 16;

/// Isomorphism-invariant vertex colours, numbered 0.. in a canonical order.
fn refined_colours(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut colour: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = g
            .vertices()
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let count = ranks.len();
        colour = next;
        if count == classes || count == n {
            return colour;
        }
        classes = count;
    }
}

fn code_of(g: &Graph, pos: &[usize]) -> u128 {
    // bit index for the pair (i, j), i < j, in row-major upper-triangle order
    let n = g.order();
    let mut code = 0u128;
    for &(a, b) in g.edges() {
        let (i, j) = (pos[a].min(pos[b]), pos[a].max(pos[b]));
        let idx = i * (2 * n - i - 1) / 2 + (j - i - 1);
        code |= 1u128 << (n * (n - 1) / 2 - 1 - idx);
    }
    code
}

/// Canonical adjacency code and a permutation `perm` (`perm[old] = new`)
/// realising it.
pub fn canonical_form(g: &Graph) -> (u128, Vec<Vertex>) {
    let n = g.order();
    assert!(
        n <= MAX_CANON_ORDER,
        "canonical form needs at most {MAX_CANON_ORDER} vertices"
    );
    if n == 0 {
        return (0, Vec::new());
    }
    let colour = refined_colours(g);
    let mut cells: BTreeMap<usize, Vec<Vertex>> = BTreeMap::new();
    for v in g.vertices() {
        cells.entry(colour[v]).or_default().push(v);
    }
    let cells: Vec<Vec<Vertex>> = cells.into_values().collect();
    let mut offsets = Vec::with_capacity(cells.len());
    let mut acc = 0;
    for c in &cells {
        offsets.push(acc);
        acc += c.len();
    }

    let mut pos = vec![0; n];
    let mut best: Option<(u128, Vec<Vertex>)> = None;
    search(g, &cells, &offsets, 0, &mut pos, &mut best);
    best.expect("at least one labelling")
}

fn search(
    g: &Graph,
    cells: &[Vec<Vertex>],
    offsets: &[usize],
    cell: usize,
    pos: &mut [usize],
    best: &mut Option<(u128, Vec<Vertex>)>,
) {
    if cell == cells.len() {
        let code = code_of(g, pos);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, pos.to_vec()));
        }
        return;
    }
    let k = cells[cell].len();
    let mut c = vec![0usize; k];
    // Heap's algorithm over the current cell
    let assign = |perm: &[Vertex], pos: &mut [usize]| {
        for (i, &v) in perm.iter().enumerate() {
            pos[v] = offsets[cell] + i;
        }
    };
    let mut perm = cells[cell].clone();
    assign(&perm, pos);
    search(g, cells, offsets, cell + 1, pos, best);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            assign(&perm, pos);
            search(g, cells, offsets, cell + 1, pos, best);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// The graph relabelled into canonical position.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, perm) = canonical_form(g);
    g.relabel(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a).0 == canonical_form(b).0
}

/// Centre vertices of a tree (one or two).
pub fn tree_centers(t: &Graph) -> Vec<Vertex> {
    let n = t.order();
    if n <= 2 {
        return t.vertices().collect();
    }
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            degree[v] = 0;
            for &w in t.neighbors(v) {
                if degree[w] > 0 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut c = layer;
    c.sort_unstable();
    c
}

fn rooted_code(t: &Graph, v: Vertex, parent: Option<Vertex>) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| Some(w) != parent)
        .map(|&w| rooted_code(t, w, Some(v)))
        .collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}

/// Canonical string of a free tree and the centre it was rooted at.
pub fn tree_code(t: &Graph) -> (String, Vertex) {
    tree_centers(t)
        .into_iter()
        .map(|c| (rooted_code(t, c, None), c))
        .min()
        .expect("non-empty tree")
}

/// Tree relabelled by breadth-first order from its canonical root, children
/// visited in order of their subtree codes.
pub fn canonical_tree(t: &Graph) -> Graph {
    let (_, root) = tree_code(t);
    let mut order = vec![root];
    let mut parent = vec![usize::MAX; t.order()];
    parent[root] = root;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        let mut kids: Vec<(String, Vertex)> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| parent[w] == usize::MAX)
            .map(|&w| (rooted_code(t, w, Some(v)), w))
            .collect();
        kids.sort_unstable();
        for (_, w) in kids {
            parent[w] = v;
            order.push(w);
        }
    }
    let mut perm = vec![0; t.order()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    t.relabel(&perm)
}
