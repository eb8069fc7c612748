//! Even cycle rank: the fewest edges whose removal leaves no even cycle.
//! Reporting only.

use crate::bits::LexSubsets;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_EVEN_CYCLE_EDGES: usize = 24;

/// Biconnected blocks as edge lists, via Hopcroft–Tarjan.
fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // explicit DFS stack of (vertex, parent, next neighbour index)
        let mut dfs = vec![(root, usize::MAX, 0usize)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut i)) = dfs.last_mut() {
            if let Some(&w) = g.neighbors(v).get(*i) {
                *i += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    dfs.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                dfs.pop();
                if let Some(&(p, _, _)) = dfs.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// True when every block is a bridge or an odd cycle.
pub fn has_no_even_cycle(g: &Graph) -> bool {
    blocks(g).iter().all(|b| {
        let mut vs: Vec<usize> = b.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        b.len() == 1 || (b.len() == vs.len() && b.len() % 2 == 1)
    })
}

/// Exhaustive over edge subsets by size, limited to graphs with at most
/// [`MAX_EVEN_CYCLE_EDGES`] edges.
pub fn even_cycle_rank(g: &Graph) -> Result<usize> {
    let m = g.size();
    if m > MAX_EVEN_CYCLE_EDGES {
        return Err(Error::CapExceeded {
            what: "even cycle rank (edges)",
            n: m,
            cap: MAX_EVEN_CYCLE_EDGES,
        });
    }
    let edges = g.edges();
    for k in 0..=m {
        for removed in LexSubsets::new(m, k) {
            let kept = edges
                .iter()
                .enumerate()
                .filter(|(i, _)| removed & (1 << i) == 0)
                .map(|(_, &e)| e);
            let h = Graph::new(g.order(), kept).expect("subgraph edges are valid");
            if has_no_even_cycle(&h) {
                return Ok(k);
            }
        }
    }
    unreachable!("removing every edge leaves no cycle")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn small_cases() {
        assert!(has_no_even_cycle(&cycle(5)));
        assert!(!has_no_even_cycle(&cycle(6)));
        assert_eq!(even_cycle_rank(&cycle(4)).unwrap(), 1);
        assert_eq!(even_cycle_rank(&cycle(7)).unwrap(), 0);
        // two triangles sharing an edge contain a 4-cycle
        let diamond = Graph::new(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 2)]).unwrap();
        assert!(!has_no_even_cycle(&diamond));
        assert_eq!(even_cycle_rank(&diamond).unwrap(), 1);
        // bowtie: two triangles at a cut vertex
        let bowtie = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(has_no_even_cycle(&bowtie));
        let k4 = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(even_cycle_rank(&k4).unwrap(), 2);
    }
}
