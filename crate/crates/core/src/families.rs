//! Named graph families, written as `name:arg,arg,...`.
//!
//! | family               | arguments                 | graph                                   |
//! |----------------------|---------------------------|-----------------------------------------|
//! | `path`               | `n`                       | P_n                                     |
//! | `cycle`              | `n` (≥ 3)                 | C_n                                     |
//! | `complete`           | `n`                       | K_n                                     |
//! | `complete_bipartite` | `s,t`                     | K_{s,t}                                 |
//! | `star`               | `k`                       | K_{1,k}                                 |
//! | `spider`             | `l1,l2,...`               | legs of the given lengths on one centre |
//! | `grid`               | `m,n`                     | P_m □ P_n                               |
//! | `c4_bouquet`         | `k`                       | k four-cycles through the centre of P_3 |
//! | `caterpillar`        | `c1,c2,...`               | spine with c_i pendant leaves at i      |
//! | `all_trees`          | `n` or `a-b`              | every tree, up to isomorphism           |
//! | `all_connected`      | `n` or `a-b`              | every connected graph, up to isomorphism|
//! | `t_plus_e`           | `n` or `a-b`              | every tree (order ≥ 3) plus one non-edge|

use std::fmt;
use std::str::FromStr;

use crate::enumerate::{connected_graphs, trees};
use crate::error::{Error, Result};
use crate::graph::{complement_edges, Graph, Vertex};

/// Enumeration families refuse orders above this.
pub const MAX_ENUMERATION_ORDER: usize = 12;
pub const MAX_CONNECTED_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Spider(Vec<usize>),
    Grid(usize, usize),
    C4Bouquet(usize),
    Caterpillar(Vec<usize>),
    AllTrees { min: usize, max: usize },
    AllConnected { min: usize, max: usize },
    TPlusE { min: usize, max: usize },
}

/// A tree together with the non-edge added to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub tree: Graph,
    pub edge: (Vertex, Vertex),
}

/// One corpus member; `origin` is set for graphs built as T + e.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Case {
    pub graph: Graph,
    pub origin: Option<TreeEdge>,
}

impl From<Graph> for Case {
    fn from(graph: Graph) -> Self {
        Self {
            graph,
            origin: None,
        }
    }
}

fn invalid(spec: &str, reason: impl Into<String>) -> Error {
    Error::InvalidFamily {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_range(spec: &str, arg: &str) -> Result<(usize, usize)> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| invalid(spec, format!("`{s}` is not a non-negative integer")))
    };
    let (a, b) = match arg.split_once("..").or_else(|| arg.split_once('-')) {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (1, num(arg)?),
    };
    if a > b {
        return Err(invalid(spec, "empty range"));
    }
    Ok((a, b))
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let nums = || -> Result<Vec<usize>> {
            args.split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(spec, format!("`{s}` is not a non-negative integer")))
                })
                .collect()
        };
        let exactly = |k: usize| -> Result<Vec<usize>> {
            let v = nums()?;
            if v.len() != k {
                return Err(invalid(
                    spec,
                    format!("expected {k} argument(s), got {}", v.len()),
                ));
            }
            Ok(v)
        };
        let fam = match name.trim() {
            "path" => FamilySpec::Path(exactly(1)?[0]),
            "cycle" => FamilySpec::Cycle(exactly(1)?[0]),
            "complete" => FamilySpec::Complete(exactly(1)?[0]),
            "complete_bipartite" => {
                let v = exactly(2)?;
                FamilySpec::CompleteBipartite(v[0], v[1])
            }
            "star" => FamilySpec::Star(exactly(1)?[0]),
            "spider" => FamilySpec::Spider(nums()?),
            "grid" => {
                let v = exactly(2)?;
                FamilySpec::Grid(v[0], v[1])
            }
            "c4_bouquet" => FamilySpec::C4Bouquet(exactly(1)?[0]),
            "caterpillar" => FamilySpec::Caterpillar(nums()?),
            "all_trees" => {
                let (min, max) = parse_range(spec, args)?;
                FamilySpec::AllTrees { min, max }
            }
            "all_connected" => {
                let (min, max) = parse_range(spec, args)?;
                FamilySpec::AllConnected { min, max }
            }
            "t_plus_e" => {
                let (min, max) = parse_range(spec, args)?;
                FamilySpec::TPlusE { min, max }
            }
            other => return Err(invalid(spec, format!("unknown family `{other}`"))),
        };
        fam.validate(spec)?;
        Ok(fam)
    }
}

impl FamilySpec {
    fn validate(&self, spec: &str) -> Result<()> {
        let fail = |r: &str| Err(invalid(spec, r));
        match self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if *n < 1 => {
                fail("order must be at least 1")
            }
            FamilySpec::Cycle(n) if *n < 3 => fail("cycles need at least 3 vertices"),
            FamilySpec::CompleteBipartite(s, t) if *s < 1 || *t < 1 => {
                fail("both sides need a vertex")
            }
            FamilySpec::Star(k) if *k < 1 => fail("a star needs at least one leaf"),
            FamilySpec::Spider(legs) if legs.is_empty() || legs.contains(&0) => {
                fail("legs must be listed and have positive length")
            }
            FamilySpec::Grid(m, n) if *m < 1 || *n < 1 => fail("grid sides must be at least 1"),
            FamilySpec::C4Bouquet(k) if *k < 1 => fail("a bouquet needs at least one cycle"),
            FamilySpec::Caterpillar(spine) if spine.is_empty() => fail("spine must be non-empty"),
            FamilySpec::AllTrees { max, .. } | FamilySpec::TPlusE { max, .. }
                if *max > MAX_ENUMERATION_ORDER =>
            {
                fail(&format!(
                    "tree enumeration is limited to {MAX_ENUMERATION_ORDER} vertices"
                ))
            }
            FamilySpec::AllConnected { max, .. } if *max > MAX_CONNECTED_ORDER => fail(&format!(
                "connected graph enumeration is limited to {MAX_CONNECTED_ORDER} vertices"
            )),
            _ => Ok(()),
        }
    }

    /// Largest order the family produces.
    pub fn max_order(&self) -> usize {
        match self {
            FamilySpec::Path(n) | FamilySpec::Cycle(n) | FamilySpec::Complete(n) => *n,
            FamilySpec::CompleteBipartite(s, t) => s + t,
            FamilySpec::Star(k) => k + 1,
            FamilySpec::Spider(legs) => 1 + legs.iter().sum::<usize>(),
            FamilySpec::Grid(m, n) => m * n,
            FamilySpec::C4Bouquet(k) => 3 + 3 * k,
            FamilySpec::Caterpillar(spine) => spine.len() + spine.iter().sum::<usize>(),
            FamilySpec::AllTrees { max, .. }
            | FamilySpec::AllConnected { max, .. }
            | FamilySpec::TPlusE { max, .. } => *max,
        }
    }

    /// Every member of the family, deterministically labelled.
    pub fn generate(&self) -> Vec<Case> {
        match self {
            FamilySpec::AllTrees { min, max } => {
                (*min..=*max).flat_map(trees).map(Case::from).collect()
            }
            FamilySpec::AllConnected { min, max } => (*min..=*max)
                .flat_map(connected_graphs)
                .map(Case::from)
                .collect(),
            FamilySpec::TPlusE { min, max } => t_plus_e_cases((*min).max(3), *max),
            single => vec![Case::from(single.build_single())],
        }
    }

    fn build_single(&self) -> Graph {
        let g = match self {
            FamilySpec::Path(n) => Graph::new(*n, (1..*n).map(|i| (i - 1, i))),
            FamilySpec::Cycle(n) => Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n))),
            FamilySpec::Complete(n) => {
                Graph::new(*n, (0..*n).flat_map(|i| (i + 1..*n).map(move |j| (i, j))))
            }
            FamilySpec::CompleteBipartite(s, t) => Graph::new(
                s + t,
                (0..*s).flat_map(|i| (*s..s + t).map(move |j| (i, j))),
            ),
            FamilySpec::Star(k) => Graph::new(k + 1, (1..=*k).map(|i| (0, i))),
            FamilySpec::Spider(legs) => {
                let mut edges = Vec::new();
                let mut next = 1;
                for &len in legs {
                    let mut prev = 0;
                    for _ in 0..len {
                        edges.push((prev, next));
                        prev = next;
                        next += 1;
                    }
                }
                Graph::new(next, edges)
            }
            FamilySpec::Grid(m, n) => {
                let id = |i: usize, j: usize| i * n + j;
                let mut edges = Vec::new();
                for i in 0..*m {
                    for j in 0..*n {
                        if j + 1 < *n {
                            edges.push((id(i, j), id(i, j + 1)));
                        }
                        if i + 1 < *m {
                            edges.push((id(i, j), id(i + 1, j)));
                        }
                    }
                }
                Graph::new(m * n, edges)
            }
            FamilySpec::C4Bouquet(k) => {
                // centre 0 with leaves 1 and 2; cycle i is 0-a-b-c-0
                let mut edges = vec![(0, 1), (0, 2)];
                for i in 0..*k {
                    let (a, b, c) = (3 + 3 * i, 4 + 3 * i, 5 + 3 * i);
                    edges.extend([(0, a), (a, b), (b, c), (c, 0)]);
                }
                Graph::new(3 + 3 * k, edges)
            }
            FamilySpec::Caterpillar(spine) => {
                let s = spine.len();
                let mut edges: Vec<(usize, usize)> = (1..s).map(|i| (i - 1, i)).collect();
                let mut next = s;
                for (i, &leaves) in spine.iter().enumerate() {
                    for _ in 0..leaves {
                        edges.push((i, next));
                        next += 1;
                    }
                }
                Graph::new(next, edges)
            }
            _ => unreachable!("enumeration families are generated elsewhere"),
        };
        g.expect("validated family parameters give valid edges")
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(s, t) => write!(f, "complete_bipartite:{s},{t}"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Spider(legs) => write!(f, "spider:{}", list(legs)),
            FamilySpec::Grid(m, n) => write!(f, "grid:{m},{n}"),
            FamilySpec::C4Bouquet(k) => write!(f, "c4_bouquet:{k}"),
            FamilySpec::Caterpillar(spine) => write!(f, "caterpillar:{}", list(spine)),
            FamilySpec::AllTrees { min, max } => write!(f, "all_trees:{min}-{max}"),
            FamilySpec::AllConnected { min, max } => write!(f, "all_connected:{min}-{max}"),
            FamilySpec::TPlusE { min, max } => write!(f, "t_plus_e:{min}-{max}"),
        }
    }
}

/// The family's graphs without provenance.
pub fn generate(spec: &FamilySpec) -> Vec<Graph> {
    spec.generate().into_iter().map(|c| c.graph).collect()
}

/// Every tree with `min..=max` vertices paired with each of its non-edges.
pub fn t_plus_e_cases(min: usize, max: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for n in min..=max {
        for t in trees(n) {
            for (u, v) in complement_edges(&t) {
                out.push(Case {
                    graph: t.with_edge(u, v).expect("non-edge"),
                    origin: Some(TreeEdge {
                        tree: t.clone(),
                        edge: (u, v),
                    }),
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    fn one(spec: &str) -> Graph {
        let mut g = generate(&spec.parse().unwrap());
        assert_eq!(g.len(), 1);
        g.remove(0)
    }

    #[test]
    fn bouquet_arithmetic() {
        let b1 = one("c4_bouquet:1");
        assert_eq!((b1.order(), b1.size(), b1.cycle_rank()), (6, 6, 1));
        let b3 = one("c4_bouquet:3");
        assert_eq!((b3.order(), b3.cycle_rank()), (12, 3));
    }

    #[test]
    fn grids() {
        let g = one("grid:2,3");
        assert_eq!((g.order(), g.size(), g.cycle_rank()), (6, 7, 2));
        let g = one("grid:3,3");
        assert_eq!((g.order(), g.size()), (9, 12));
    }

    #[test]
    fn small_families() {
        assert_eq!(one("star:4").size(), 4);
        assert_eq!(one("spider:1,2,3").order(), 7);
        assert_eq!(one("complete_bipartite:2,3").size(), 6);
        let cat = one("caterpillar:2,0,2");
        assert_eq!((cat.order(), cat.size()), (7, 6));
        assert_eq!(
            classify(&one("cycle:7")).unwrap(),
            crate::graph::GraphClass::Unicyclic
        );
    }

    #[test]
    fn enumerations() {
        let spec: FamilySpec = "all_trees:5".parse().unwrap();
        assert_eq!(spec, FamilySpec::AllTrees { min: 1, max: 5 });
        let five: FamilySpec = "all_trees:5-5".parse().unwrap();
        assert_eq!(generate(&five).len(), 3);
        let tpe: FamilySpec = "t_plus_e:4".parse().unwrap();
        // P4 has 3 non-edges, the claw has 3
        assert_eq!(tpe.generate().len(), 1 + 6);
        assert!(tpe.generate().iter().all(|c| c.graph.cycle_rank() == 1));
    }

    #[test]
    fn rejects_bad_specs() {
        for bad in [
            "grid:0,3",
            "cycle:2",
            "c4_bouquet:0",
            "nope:3",
            "grid:3",
            "path:x",
            "all_connected:9",
        ] {
            assert!(bad.parse::<FamilySpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["grid:3,3", "spider:1,2,3", "all_trees:2-10", "c4_bouquet:2"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }

    #[test]
    fn deterministic() {
        let spec: FamilySpec = "all_connected:5-5".parse().unwrap();
        assert_eq!(generate(&spec), generate(&spec));
        assert_eq!(generate(&spec).len(), 21);
    }
}
