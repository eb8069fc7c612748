//! Metric codes, resolving and strongly resolving landmark sets, and the exact
//! metric dimension by exhaustive search.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::bits::{full_mask, members, ColexSubsets, DistTable, LexSubsets};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::profile::StructuralProfile;

/// Largest order the exhaustive searches accept unless told otherwise.
pub const DEFAULT_SEARCH_CAP: usize = 24;

/// Distance vector of one vertex against an ordered landmark list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MetricCode {
    pub landmarks: Vec<Vertex>,
    pub distances: Vec<Option<u32>>,
}

impl MetricCode {
    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }

    /// Code shifted so its least finite coordinate is zero. Two codes differ
    /// by a constant vector exactly when their normal forms agree.
    fn normalized(&self) -> Vec<Option<u32>> {
        let min = self.distances.iter().flatten().min().copied().unwrap_or(0);
        self.distances.iter().map(|d| d.map(|x| x - min)).collect()
    }
}

fn check_vertices(dm: &DistanceMatrix, vs: &[Vertex]) -> Result<()> {
    match vs.iter().find(|&&v| v >= dm.order()) {
        Some(&vertex) => Err(Error::InvalidVertex {
            vertex,
            n: dm.order(),
        }),
        None => Ok(()),
    }
}

pub fn metric_code(dm: &DistanceMatrix, v: Vertex, landmarks: &[Vertex]) -> Result<MetricCode> {
    if landmarks.is_empty() {
        return Err(Error::EmptyLandmarks);
    }
    check_vertices(dm, landmarks)?;
    check_vertices(dm, &[v])?;
    Ok(MetricCode {
        landmarks: landmarks.to_vec(),
        distances: landmarks.iter().map(|&w| dm.get(v, w)).collect(),
    })
}

fn raw_codes(dm: &DistanceMatrix, landmarks: &[Vertex]) -> Vec<Vec<Option<u32>>> {
    (0..dm.order())
        .map(|v| landmarks.iter().map(|&w| dm.get(v, w)).collect())
        .collect()
}

/// First pair `(x, y)`, `x < y`, with identical codes, ordered by `y` then `x`.
/// `None` means the landmarks resolve the graph.
pub fn unresolved_pair(dm: &DistanceMatrix, landmarks: &[Vertex]) -> Option<(Vertex, Vertex)> {
    let mut seen: HashMap<Vec<Option<u32>>, Vertex> = HashMap::new();
    for (v, code) in raw_codes(dm, landmarks).into_iter().enumerate() {
        if let Some(&u) = seen.get(&code) {
            return Some((u, v));
        }
        seen.insert(code, v);
    }
    None
}

pub fn is_resolving(dm: &DistanceMatrix, landmarks: &[Vertex]) -> bool {
    unresolved_pair(dm, landmarks).is_none()
}

/// No two distinct vertices have codes differing by a constant vector.
pub fn strongly_resolves(dm: &DistanceMatrix, landmarks: &[Vertex]) -> bool {
    resolution_classes(dm, landmarks)
        .classes
        .iter()
        .all(|c| c.len() == 1)
}

/// Partition of the vertex set under "codes differ by a constant vector".
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolutionClasses {
    /// Sorted classes ordered by least member.
    pub classes: Vec<Vec<Vertex>>,
    class_of: Vec<usize>,
}

impl ResolutionClasses {
    pub fn class_of(&self, v: Vertex) -> &[Vertex] {
        &self.classes[self.class_of[v]]
    }

    pub fn same_class(&self, u: Vertex, v: Vertex) -> bool {
        self.class_of[u] == self.class_of[v]
    }
}

pub fn resolution_classes(dm: &DistanceMatrix, landmarks: &[Vertex]) -> ResolutionClasses {
    let mut groups: BTreeMap<Vec<Option<u32>>, Vec<Vertex>> = BTreeMap::new();
    for v in 0..dm.order() {
        let code = MetricCode {
            landmarks: Vec::new(),
            distances: landmarks.iter().map(|&w| dm.get(v, w)).collect(),
        };
        groups.entry(code.normalized()).or_default().push(v);
    }
    let mut classes: Vec<Vec<Vertex>> = groups.into_values().collect();
    classes.sort_unstable_by_key(|c| c[0]);
    let mut class_of = vec![0; dm.order()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    ResolutionClasses { classes, class_of }
}

/// A minimum resolving set together with its size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricBasis {
    pub dim: usize,
    pub basis: Vec<Vertex>,
}

pub(crate) fn check_search_domain(g: &Graph, cap: usize, what: &'static str) -> Result<()> {
    g.require_parameter_domain()?;
    if g.order() > cap || g.order() > 64 {
        return Err(Error::CapExceeded {
            what,
            n: g.order(),
            cap: cap.min(64),
        });
    }
    Ok(())
}

/// Exact metric dimension; subsets are tried by size, then lexicographically,
/// so the witness is the lexicographically least basis.
pub fn metric_dimension_bruteforce(g: &Graph) -> Result<MetricBasis> {
    metric_dimension_with_cap(g, DEFAULT_SEARCH_CAP)
}

pub fn metric_dimension_with_cap(g: &Graph, cap: usize) -> Result<MetricBasis> {
    check_search_domain(g, cap, "metric dimension search")?;
    let table = DistTable::new(&DistanceMatrix::new(g));
    let n = g.order();
    let mut scratch = Vec::with_capacity(n);
    for k in 1..=n {
        if let Some(mask) = LexSubsets::new(n, k).find(|&m| table.resolves(m, &mut scratch)) {
            return Ok(MetricBasis {
                dim: k,
                basis: members(mask),
            });
        }
    }
    unreachable!("the whole vertex set always resolves")
}

/// Same minimum found by walking each size class in colexicographic order.
pub fn metric_dimension_colex(g: &Graph, cap: usize) -> Result<MetricBasis> {
    check_search_domain(g, cap, "metric dimension search")?;
    let table = DistTable::new(&DistanceMatrix::new(g));
    let n = g.order();
    let mut scratch = Vec::with_capacity(n);
    for k in 1..=n {
        if let Some(mask) = ColexSubsets::new(n, k).find(|&m| table.resolves(m, &mut scratch)) {
            return Ok(MetricBasis {
                dim: k,
                basis: members(mask),
            });
        }
    }
    unreachable!("the whole vertex set always resolves")
}

/// Same minimum found by scanning every mask in descending numeric order and
/// keeping the smallest resolving one.
pub fn metric_dimension_full_scan(g: &Graph, cap: usize) -> Result<MetricBasis> {
    check_search_domain(g, cap.min(24), "metric dimension full scan")?;
    let table = DistTable::new(&DistanceMatrix::new(g));
    let n = g.order();
    let mut scratch = Vec::with_capacity(n);
    let mut best = full_mask(n);
    for mask in (1..full_mask(n)).rev() {
        if mask.count_ones() < best.count_ones() && table.resolves(mask, &mut scratch) {
            best = mask;
        }
    }
    Ok(MetricBasis {
        dim: best.count_ones() as usize,
        basis: members(best),
    })
}

/// σ(G) − ex(G), a lower bound on dim(G).
pub fn sigma_ex_lower_bound(profile: &StructuralProfile) -> usize {
    profile.sigma - profile.ex
}
