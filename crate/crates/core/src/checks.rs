//! Per-graph checks of the inequalities relating dim, Z, P and the tree
//! invariants, evaluated over lazily computed parameters.

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Case;
use crate::forcing::{
    check_z_perturbation, one_step_resolving_check, zero_forcing_colex, zero_forcing_full_scan,
    zero_forcing_with_cap, ZeroForcing,
};
use crate::graph::{classify, cycle_edges, DistanceMatrix, Graph, GraphClass, Vertex};
use crate::pathcover::{path_cover_with_cap, PathCover};
use crate::profile::{structural_profile, StructuralProfile};
use crate::resolve::{
    is_resolving, metric_code, metric_dimension_colex, metric_dimension_full_scan,
    metric_dimension_with_cap, MetricBasis,
};
use crate::tree::{dim_equals_z_tree_predicate, tree_metric_dimension, zfs_structure_audit};
use crate::unicyclic::{subtree_roots, unicyclic_resolving_construction};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    Extremal,
    MinDegree,
    OneStepResolving,
    SigmaExLower,
    TreeFormula,
    DimLeZ,
    PathCover,
    Characterization,
    ZfsAudit,
    UnicyclicBounds,
    ZPerturbation,
    DimZPlus1,
    Construction,
    CycleRankConjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Theorem,
    Conjecture,
}

impl Check {
    pub const ALL: [Check; 14] = [
        Check::Extremal,
        Check::MinDegree,
        Check::OneStepResolving,
        Check::SigmaExLower,
        Check::TreeFormula,
        Check::DimLeZ,
        Check::PathCover,
        Check::Characterization,
        Check::ZfsAudit,
        Check::UnicyclicBounds,
        Check::ZPerturbation,
        Check::DimZPlus1,
        Check::Construction,
        Check::CycleRankConjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Extremal => "extremal",
            Check::MinDegree => "min_degree",
            Check::OneStepResolving => "one_step_resolving",
            Check::SigmaExLower => "sigma_ex_lower",
            Check::TreeFormula => "tree_formula",
            Check::DimLeZ => "dim_le_Z",
            Check::PathCover => "path_cover",
            Check::Characterization => "characterization",
            Check::ZfsAudit => "zfs_audit",
            Check::UnicyclicBounds => "unicyclic_bounds",
            Check::ZPerturbation => "z_perturbation",
            Check::DimZPlus1 => "dimZ_plus1",
            Check::Construction => "construction",
            Check::CycleRankConjecture => "cycle_rank_conjecture",
        }
    }

    /// The statement the check instantiates.
    pub fn statement(self) -> &'static str {
        match self {
            Check::Extremal => {
                "dim(G) = 1 and Z(G) = 1 iff G is a path; dim(G) = n-1 and Z(G) = n-1 iff G is complete"
            }
            Check::MinDegree => "delta(G) <= Z(G)",
            Check::OneStepResolving => "a set forcing V(G) in one round is resolving",
            Check::SigmaExLower => "sigma(G) - ex(G) <= dim(G)",
            Check::TreeFormula => "dim(T) = sigma(T) - ex(T) for trees other than paths",
            Check::DimLeZ => "dim(T) <= Z(T) for trees",
            Check::PathCover => "P(G) <= Z(G), with equality on trees",
            Check::Characterization => {
                "dim(T) = Z(T) iff T has no interior degree-2 vertex and ter(v) >= 2 at every major v"
            }
            Check::ZfsAudit => {
                "when dim(T) = Z(T), a minimum zero forcing set misses exactly one terminal path per exterior major vertex"
            }
            Check::UnicyclicBounds => "dim(T) - 2 <= dim(T+e) <= dim(T) + 1",
            Check::ZPerturbation => "Z(G) - 1 <= Z(G - x) <= Z(G) + 1 for a vertex or edge x",
            Check::DimZPlus1 => "dim(G) <= Z(G) + 1 for unicyclic G",
            Check::Construction => {
                "the cycle-vertex extension of a tree basis resolves T+e with at most dim(T) + 1 vertices"
            }
            Check::CycleRankConjecture => "dim(G) <= Z(G) + r(G)",
        }
    }

    pub fn kind(self) -> CheckKind {
        match self {
            Check::CycleRankConjecture => CheckKind::Conjecture,
            _ => CheckKind::Theorem,
        }
    }

    pub fn valid_names() -> String {
        Check::ALL
            .iter()
            .map(|c| c.name())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Comma-separated names; `all` selects every check.
    pub fn parse_list(list: &str) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if name == "all" {
                out.extend(Check::ALL);
            } else {
                out.push(name.parse()?);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Check {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck {
                name: s.to_string(),
                valid: Check::valid_names(),
            })
    }
}

/// Size limits for the exhaustive parts of a check run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Brute-force dim and Z.
    pub search: usize,
    pub path_cover: usize,
    /// Every subset is tried by the one-round check up to this order.
    pub one_step: usize,
    /// Deletion checks recompute Z this many vertices and below.
    pub perturbation: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            search: 16,
            path_cover: 12,
            one_step: 10,
            perturbation: 10,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    NotApplicable,
    Pass,
    Fail(String),
}

/// A tree T with the edge e such that the analysed graph is T + e.
#[derive(Clone, Debug)]
pub struct Split {
    pub tree: Graph,
    pub edge: (Vertex, Vertex),
    pub tree_dim: usize,
    pub tree_ex: usize,
}

/// Parameters of one graph, computed on first use.
pub struct Analysis<'a> {
    pub case: &'a Case,
    pub caps: Caps,
    dm: OnceCell<DistanceMatrix>,
    profile: OnceCell<StructuralProfile>,
    class: OnceCell<Result<GraphClass>>,
    dim: OnceCell<Result<MetricBasis>>,
    z: OnceCell<Result<ZeroForcing>>,
    p: OnceCell<Result<PathCover>>,
    splits: OnceCell<Result<Vec<Split>>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, f: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(f).as_ref().map_err(Clone::clone)
}

impl<'a> Analysis<'a> {
    pub fn new(case: &'a Case, caps: Caps) -> Self {
        Self {
            case,
            caps,
            dm: OnceCell::new(),
            profile: OnceCell::new(),
            class: OnceCell::new(),
            dim: OnceCell::new(),
            z: OnceCell::new(),
            p: OnceCell::new(),
            splits: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.case.graph
    }

    pub fn dm(&self) -> &DistanceMatrix {
        self.dm.get_or_init(|| DistanceMatrix::new(self.graph()))
    }

    pub fn profile(&self) -> &StructuralProfile {
        self.profile
            .get_or_init(|| structural_profile(self.graph(), self.dm()))
    }

    pub fn class(&self) -> Result<GraphClass> {
        cached(&self.class, || classify(self.graph())).copied()
    }

    pub fn dim(&self) -> Result<&MetricBasis> {
        cached(&self.dim, || {
            metric_dimension_with_cap(self.graph(), self.caps.search)
        })
    }

    pub fn z(&self) -> Result<&ZeroForcing> {
        cached(&self.z, || {
            zero_forcing_with_cap(self.graph(), self.caps.search)
        })
    }

    pub fn path_cover(&self) -> Result<&PathCover> {
        cached(&self.p, || {
            path_cover_with_cap(self.graph(), self.caps.path_cover)
        })
    }

    /// Replaces the searched values, e.g. with closed-form ones.
    pub fn seed(&self, dim: Option<MetricBasis>, z: Option<ZeroForcing>) {
        if let Some(d) = dim {
            let _ = self.dim.set(Ok(d));
        }
        if let Some(z) = z {
            let _ = self.z.set(Ok(z));
        }
    }

    /// The provenance split if the case carries one, else one split per cycle
    /// edge. Empty unless the graph is unicyclic.
    pub fn splits(&self) -> Result<&[Split]> {
        cached(&self.splits, || {
            if self.class()? != GraphClass::Unicyclic {
                return Ok(Vec::new());
            }
            let pairs: Vec<(Graph, (Vertex, Vertex))> = match &self.case.origin {
                Some(o) => vec![(o.tree.clone(), o.edge)],
                None => cycle_edges(self.graph())?
                    .into_iter()
                    .map(|(u, v)| Ok((self.graph().without_edge(u, v)?, (u, v))))
                    .collect::<Result<_>>()?,
            };
            pairs
                .into_iter()
                .map(|(tree, edge)| {
                    let tree_dim = metric_dimension_with_cap(&tree, self.caps.search)?.dim;
                    let tree_ex = structural_profile(&tree, &DistanceMatrix::new(&tree)).ex;
                    Ok(Split {
                        tree,
                        edge,
                        tree_dim,
                        tree_ex,
                    })
                })
                .collect()
        })
        .map(Vec::as_slice)
    }

    pub fn evaluate(&self, check: Check) -> Result<Outcome> {
        let g = self.graph();
        let n = g.order();
        let class = self.class()?;
        let fail = |s: String| Ok(Outcome::Fail(s));
        let verdict = |ok: bool, detail: String| {
            Ok(if ok {
                Outcome::Pass
            } else {
                Outcome::Fail(detail)
            })
        };
        match check {
            Check::Extremal => {
                let (dim, z) = (self.dim()?.dim, self.z()?.number);
                let (path, complete) = (class == GraphClass::Path, g.is_complete());
                let ok = (dim == 1) == path
                    && (z == 1) == path
                    && (dim == n - 1) == complete
                    && (z == n - 1) == complete;
                verdict(
                    ok,
                    format!("dim={dim} Z={z} path={path} complete={complete}"),
                )
            }
            Check::MinDegree => {
                let (delta, z) = (g.min_degree(), self.z()?.number);
                verdict(delta <= z, format!("delta={delta} Z={z}"))
            }
            Check::OneStepResolving => {
                if n > self.caps.one_step {
                    return Ok(Outcome::NotApplicable);
                }
                for mask in 1u64..(1 << n) {
                    let s = crate::bits::members(mask);
                    if !one_step_resolving_check(g, self.dm(), &s).holds() {
                        return fail(format!("S={s:?} forces in one round but does not resolve"));
                    }
                }
                Ok(Outcome::Pass)
            }
            Check::SigmaExLower => {
                let p = self.profile();
                let dim = self.dim()?.dim;
                verdict(
                    p.sigma - p.ex <= dim,
                    format!("sigma={} ex={} dim={dim}", p.sigma, p.ex),
                )
            }
            Check::TreeFormula => {
                if !class.is_tree() {
                    return Ok(Outcome::NotApplicable);
                }
                let (formula, dim) = (tree_metric_dimension(g)?, self.dim()?.dim);
                verdict(formula == dim, format!("formula={formula} brute={dim}"))
            }
            Check::DimLeZ => {
                if !class.is_tree() {
                    return Ok(Outcome::NotApplicable);
                }
                let (dim, z) = (self.dim()?.dim, self.z()?.number);
                verdict(dim <= z, format!("dim={dim} Z={z}"))
            }
            Check::PathCover => {
                let (p, z) = (self.path_cover()?, self.z()?.number);
                if !p.is_valid_for(g) {
                    return fail(format!(
                        "cover {:?} is not a partition into induced paths",
                        p.blocks
                    ));
                }
                let ok = if class.is_tree() {
                    p.len() == z
                } else {
                    p.len() <= z
                };
                verdict(ok, format!("P={} Z={z} tree={}", p.len(), class.is_tree()))
            }
            Check::Characterization => {
                if !class.is_tree() {
                    return Ok(Outcome::NotApplicable);
                }
                let pred = dim_equals_z_tree_predicate(g, self.profile())?;
                let (dim, z) = (self.dim()?.dim, self.z()?.number);
                verdict(
                    pred == (dim == z),
                    format!("predicate={pred} dim={dim} Z={z}"),
                )
            }
            Check::ZfsAudit => {
                if !class.is_tree() || !dim_equals_z_tree_predicate(g, self.profile())? {
                    return Ok(Outcome::NotApplicable);
                }
                let (dim, z) = (self.dim()?.dim, self.z()?);
                if dim != z.number {
                    // reported by the characterization check
                    return Ok(Outcome::NotApplicable);
                }
                let audit = zfs_structure_audit(g, self.profile(), &z.witness)?;
                verdict(
                    audit.passed(),
                    format!(
                        "witness {:?}: omitted terminal paths {:?}",
                        z.witness, audit.emvs
                    ),
                )
            }
            Check::UnicyclicBounds => {
                let splits = self.splits()?;
                if splits.is_empty() {
                    return Ok(Outcome::NotApplicable);
                }
                let dim = self.dim()?.dim;
                for s in splits {
                    if dim + 2 < s.tree_dim || dim > s.tree_dim + 1 {
                        return fail(format!(
                            "e={:?} dim(T)={} dim(T+e)={dim}",
                            s.edge, s.tree_dim
                        ));
                    }
                }
                Ok(Outcome::Pass)
            }
            Check::ZPerturbation => {
                if n > self.caps.perturbation {
                    return Ok(Outcome::NotApplicable);
                }
                let report = check_z_perturbation(g, self.caps.search)?;
                let first = report.violations().next().cloned();
                match first {
                    None => Ok(Outcome::Pass),
                    Some(v) => fail(format!(
                        "Z={} after {:?}: Z={}",
                        report.z, v.deletion, v.z_after
                    )),
                }
            }
            Check::DimZPlus1 => {
                if class != GraphClass::Unicyclic {
                    return Ok(Outcome::NotApplicable);
                }
                let (dim, z) = (self.dim()?.dim, self.z()?.number);
                verdict(dim <= z + 1, format!("dim={dim} Z={z}"))
            }
            Check::Construction => {
                let splits = self.splits()?;
                if splits.is_empty() {
                    return Ok(Outcome::NotApplicable);
                }
                for s in splits {
                    if let Some(problem) = construction_problem(g, self.dm(), s)? {
                        return fail(problem);
                    }
                }
                Ok(Outcome::Pass)
            }
            Check::CycleRankConjecture => {
                let (dim, z, r) = (self.dim()?.dim, self.z()?.number, g.cycle_rank());
                verdict(dim <= z + r, format!("dim={dim} Z={z} r={r}"))
            }
        }
    }
}

/// Why the construction fails for `split`, if it does.
fn construction_problem(g: &Graph, dm: &DistanceMatrix, split: &Split) -> Result<Option<String>> {
    let c = unicyclic_resolving_construction(&split.tree, split.edge)?;
    let e = split.edge;
    if c.resolving_set.len() > split.tree_dim + 1 {
        return Ok(Some(format!(
            "e={e:?}: set {:?} has more than dim(T)+1 = {} vertices",
            c.resolving_set,
            split.tree_dim + 1
        )));
    }
    if !is_resolving(dm, &c.resolving_set) {
        return Ok(Some(format!(
            "e={e:?}: set {:?} does not resolve",
            c.resolving_set
        )));
    }
    if let Some(anchors) = c.anchors {
        let roots = subtree_roots(g, &c.cycle);
        for x in g.vertices() {
            for y in x + 1..g.order() {
                if roots[x] != roots[y]
                    && metric_code(dm, x, &anchors)? == metric_code(dm, y, &anchors)?
                {
                    return Ok(Some(format!(
                        "e={e:?}: anchors {anchors:?} give {x} and {y} in different subtrees one code"
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// Recomputes dim and Z with two further search orders; true when all three
/// agree and still give dim > Z + r.
pub fn confirm_conjecture_violation(g: &Graph, cap: usize) -> Result<bool> {
    let dims = [
        metric_dimension_with_cap(g, cap)?.dim,
        metric_dimension_colex(g, cap)?.dim,
        metric_dimension_full_scan(g, cap)?.dim,
    ];
    let zs = [
        zero_forcing_with_cap(g, cap)?.number,
        zero_forcing_colex(g, cap)?.number,
        zero_forcing_full_scan(g, cap)?.number,
    ];
    let agree = dims.iter().all(|&d| d == dims[0]) && zs.iter().all(|&z| z == zs[0]);
    Ok(agree && dims[0] > zs[0] + g.cycle_rank())
}
