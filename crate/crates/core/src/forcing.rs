//! The color-change rule: a black vertex with exactly one white neighbour
//! forces that neighbour black. Closures, zero forcing sets and the exact
//! zero forcing number.

use serde::Serialize;

use crate::bits::{full_mask, mask_of, members, BitGraph, ColexSubsets, LexSubsets, Mask};
use crate::error::Result;
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::resolve::{check_search_domain, is_resolving, DEFAULT_SEARCH_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ForceEvent {
    pub forcer: Vertex,
    pub forced: Vertex,
    pub round: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcingTrace {
    pub initial: Vec<Vertex>,
    pub events: Vec<ForceEvent>,
    pub final_black: Vec<Vertex>,
}

impl ForcingTrace {
    pub fn rounds(&self) -> usize {
        self.events.last().map_or(0, |e| e.round + 1)
    }
}

/// Applies the rule to a fixpoint. Within a round, every force eligible at
/// the start of the round fires, in order of forcer index; a vertex already
/// claimed earlier in the round is skipped.
pub fn forcing_closure(g: &Graph, initial: &[Vertex]) -> ForcingTrace {
    let n = g.order();
    let mut black = vec![false; n];
    for &v in initial {
        black[v] = true;
    }
    let mut events = Vec::new();
    for round in 0.. {
        let mut claimed = vec![false; n];
        let mut fired = Vec::new();
        for u in g.vertices().filter(|&u| black[u]) {
            let mut whites = g.neighbors(u).iter().filter(|&&w| !black[w]);
            if let (Some(&w), None) = (whites.next(), whites.next()) {
                if !claimed[w] {
                    claimed[w] = true;
                    fired.push(ForceEvent {
                        forcer: u,
                        forced: w,
                        round,
                    });
                }
            }
        }
        if fired.is_empty() {
            break;
        }
        for e in &fired {
            black[e.forced] = true;
        }
        events.extend(fired);
    }
    let mut init = initial.to_vec();
    init.sort_unstable();
    init.dedup();
    ForcingTrace {
        initial: init,
        events,
        final_black: g.vertices().filter(|&v| black[v]).collect(),
    }
}

pub fn is_zero_forcing(g: &Graph, initial: &[Vertex]) -> bool {
    forcing_closure(g, initial).final_black.len() == g.order()
}

/// Fixpoint of the rule on bitmasks; forces are applied as they are found.
pub(crate) fn closure_mask(bg: &BitGraph, start: Mask) -> Mask {
    let mut black = start;
    loop {
        let mut changed = false;
        let mut scan = black;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let white = bg.adj[v] & !black;
            if white.count_ones() == 1 {
                black |= white;
                changed = true;
            }
        }
        if !changed {
            return black;
        }
    }
}

/// Outcome of one simultaneous application of the rule from `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OneStepCheck {
    /// Every white vertex is the unique white neighbour of some black vertex.
    pub forces_all: bool,
    pub resolves: bool,
}

impl OneStepCheck {
    /// One-round forcing implies resolving.
    pub fn holds(&self) -> bool {
        !self.forces_all || self.resolves
    }
}

pub fn one_step_resolving_check(g: &Graph, dm: &DistanceMatrix, s: &[Vertex]) -> OneStepCheck {
    let mut black = vec![false; g.order()];
    for &v in s {
        black[v] = true;
    }
    let mut reached = black.clone();
    for u in g.vertices().filter(|&u| black[u]) {
        let mut whites = g.neighbors(u).iter().filter(|&&w| !black[w]);
        if let (Some(&w), None) = (whites.next(), whites.next()) {
            reached[w] = true;
        }
    }
    OneStepCheck {
        forces_all: reached.iter().all(|&b| b),
        resolves: !s.is_empty() && is_resolving(dm, s),
    }
}

pub fn min_degree_bound(g: &Graph) -> usize {
    g.min_degree()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroForcing {
    pub number: usize,
    pub witness: Vec<Vertex>,
}

pub fn zero_forcing_bruteforce(g: &Graph) -> Result<ZeroForcing> {
    zero_forcing_with_cap(g, DEFAULT_SEARCH_CAP)
}

/// Exact Z(G) with the lexicographically least witness of minimum size. The
/// search starts at max(1, δ(G)) since no smaller set can force.
pub fn zero_forcing_with_cap(g: &Graph, cap: usize) -> Result<ZeroForcing> {
    check_search_domain(g, cap, "zero forcing search")?;
    let bg = BitGraph::new(g);
    let full = bg.full();
    let n = g.order();
    for k in g.min_degree().max(1)..=n {
        if let Some(mask) = LexSubsets::new(n, k).find(|&m| closure_mask(&bg, m) == full) {
            return Ok(ZeroForcing {
                number: k,
                witness: members(mask),
            });
        }
    }
    unreachable!("the whole vertex set forces")
}

/// Z(G) via colexicographic order from size one, without the degree prune.
pub fn zero_forcing_colex(g: &Graph, cap: usize) -> Result<ZeroForcing> {
    check_search_domain(g, cap, "zero forcing search")?;
    let bg = BitGraph::new(g);
    let full = bg.full();
    let n = g.order();
    for k in 1..=n {
        if let Some(mask) = ColexSubsets::new(n, k).find(|&m| closure_mask(&bg, m) == full) {
            return Ok(ZeroForcing {
                number: k,
                witness: members(mask),
            });
        }
    }
    unreachable!("the whole vertex set forces")
}

/// Z(G) by scanning every mask and keeping the smallest forcing one.
pub fn zero_forcing_full_scan(g: &Graph, cap: usize) -> Result<ZeroForcing> {
    check_search_domain(g, cap.min(24), "zero forcing full scan")?;
    let bg = BitGraph::new(g);
    let full = full_mask(g.order());
    let mut best = full;
    for mask in 1..full {
        if mask.count_ones() < best.count_ones() && closure_mask(&bg, mask) == full {
            best = mask;
        }
    }
    Ok(ZeroForcing {
        number: best.count_ones() as usize,
        witness: members(best),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Deletion {
    Vertex { vertex: Vertex },
    Edge { u: Vertex, v: Vertex },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionOutcome {
    pub deletion: Deletion,
    pub z_after: usize,
    pub within_bounds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationReport {
    pub z: usize,
    pub outcomes: Vec<DeletionOutcome>,
    /// Deletions that disconnect the graph or leave fewer than two vertices.
    pub skipped: Vec<Deletion>,
}

impl PerturbationReport {
    pub fn violations(&self) -> impl Iterator<Item = &DeletionOutcome> {
        self.outcomes.iter().filter(|o| !o.within_bounds)
    }

    pub fn holds(&self) -> bool {
        self.violations().next().is_none()
    }
}

/// Checks Z(G) − 1 ≤ Z(G − x) ≤ Z(G) + 1 for every single vertex and edge
/// deletion that leaves a connected graph on at least two vertices.
pub fn check_z_perturbation(g: &Graph, cap: usize) -> Result<PerturbationReport> {
    let z = zero_forcing_with_cap(g, cap)?.number;
    let mut outcomes = Vec::new();
    let mut skipped = Vec::new();
    let mut record = |deletion: Deletion, h: Graph| -> Result<()> {
        if h.order() < 2 || !h.is_connected() {
            skipped.push(deletion);
            return Ok(());
        }
        let z_after = zero_forcing_with_cap(&h, cap)?.number;
        outcomes.push(DeletionOutcome {
            deletion,
            z_after,
            within_bounds: z_after + 1 >= z && z_after <= z + 1,
        });
        Ok(())
    };
    for v in g.vertices() {
        record(Deletion::Vertex { vertex: v }, g.without_vertex(v))?;
    }
    for &(u, v) in g.edges() {
        record(Deletion::Edge { u, v }, g.without_edge(u, v)?)?;
    }
    Ok(PerturbationReport {
        z,
        outcomes,
        skipped,
    })
}

/// Closure on a bitmask for callers holding a plain vertex list.
pub fn forces_all(g: &Graph, s: &[Vertex]) -> bool {
    if g.order() <= 64 {
        let bg = BitGraph::new(g);
        closure_mask(&bg, mask_of(s)) == bg.full()
    } else {
        is_zero_forcing(g, s)
    }
}
