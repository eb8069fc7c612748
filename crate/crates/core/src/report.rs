//! All parameters, witnesses and applicable verdicts for one graph.

use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;

use crate::checks::{Analysis, Caps, Check, CheckKind, Outcome};
use crate::error::{Error, Result};
use crate::even_cycle::{even_cycle_rank, has_no_even_cycle, MAX_EVEN_CYCLE_EDGES};
use crate::families::Case;
use crate::forcing::ZeroForcing;
use crate::graph::{Graph, Vertex};
use crate::io::to_graph6;
use crate::resolve::MetricBasis;
use crate::tree::{
    dim_equals_z_tree_predicate, tree_basis_construction, tree_metric_dimension,
    tree_zero_forcing_construction,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// Closed forms on trees, brute force elsewhere.
    Formula,
    #[default]
    Bruteforce,
    /// Brute force, cross-checked against the closed forms on trees.
    Both,
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formula" => Ok(Method::Formula),
            "bruteforce" => Ok(Method::Bruteforce),
            "both" => Ok(Method::Both),
            other => Err(Error::Precondition(format!(
                "unknown method `{other}`; use formula, bruteforce or both"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub method: Method,
    pub path_cover: bool,
    pub caps: Caps,
    pub timing: bool,
    /// Adds the even cycle rank for graphs with few enough edges.
    pub even_cycle_rank: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            method: Method::Bruteforce,
            path_cover: false,
            caps: Caps::default(),
            timing: true,
            even_cycle_rank: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: Check,
    pub kind: CheckKind,
    pub statement: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub tree: bool,
    pub path: bool,
    pub unicyclic: bool,
    pub complete: bool,
    pub no_even_cycle: bool,
    /// The tree condition for dim = Z; null off trees.
    #[serde(rename = "dim_eq_Z_tree_condition")]
    pub dim_eq_z_tree_condition: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Timing {
    pub dim: u64,
    #[serde(rename = "Z")]
    pub z: u64,
    #[serde(rename = "P")]
    pub p: Option<u64>,
    pub total: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParameterReport {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub graph6: String,
    pub class: &'static str,
    pub r: usize,
    pub delta: usize,
    pub sigma: usize,
    pub ex: usize,
    pub dim: usize,
    pub dim_basis: Vec<Vertex>,
    pub dim_method: &'static str,
    #[serde(rename = "Z")]
    pub z: usize,
    #[serde(rename = "Z_witness")]
    pub z_witness: Vec<Vertex>,
    #[serde(rename = "P")]
    pub p: Option<usize>,
    #[serde(rename = "P_cover")]
    pub p_cover: Option<Vec<Vec<Vertex>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_e: Option<usize>,
    pub predicates: Predicates,
    pub verdicts: Vec<Verdict>,
    pub timing_ms: Option<Timing>,
}

impl ParameterReport {
    pub fn failed_theorems(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts
            .iter()
            .filter(|v| !v.holds && v.kind == CheckKind::Theorem)
    }

    /// JSON with keys in sorted order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

fn ms(t: Instant) -> u64 {
    t.elapsed().as_millis() as u64
}

/// Closed-form dim and Z with witnesses for a tree.
fn tree_values(g: &Graph, a: &Analysis) -> Result<(MetricBasis, ZeroForcing)> {
    let dim = tree_metric_dimension(g)?;
    let basis = if g.is_path() {
        vec![g
            .vertices()
            .find(|&v| g.degree(v) <= 1)
            .expect("paths have ends")]
    } else {
        tree_basis_construction(g, a.profile())?
    };
    let f = tree_zero_forcing_construction(g, a.profile(), a.caps.search)?;
    Ok((
        MetricBasis { dim, basis },
        ZeroForcing {
            number: f.number,
            witness: f.forcing_set,
        },
    ))
}

pub fn compute_report(g: &Graph, opts: &ReportOptions) -> Result<ParameterReport> {
    compute_case_report(&Case::from(g.clone()), opts)
}

/// Report for a case, using its provenance tree for the unicyclic checks.
pub fn compute_case_report(case: &Case, opts: &ReportOptions) -> Result<ParameterReport> {
    let total = Instant::now();
    let g = &case.graph;
    g.require_parameter_domain()?;
    let a = Analysis::new(case, opts.caps);
    let class = a.class()?;
    let tree = class.is_tree();

    let formula = tree && opts.method == Method::Formula;
    let t_dim = Instant::now();
    if formula {
        let (dim, z) = tree_values(g, &a)?;
        a.seed(Some(dim), Some(z));
    }
    let dim = a.dim()?.clone();
    let dim_ms = ms(t_dim);
    let t_z = Instant::now();
    let z = a.z()?.clone();
    let z_ms = ms(t_z);

    let want_cover = opts.path_cover || (tree && opts.method == Method::Both);
    let t_p = Instant::now();
    let cover = if want_cover {
        Some(a.path_cover()?.clone())
    } else {
        None
    };
    let p_ms = want_cover.then(|| ms(t_p));

    let mut verdicts = Vec::new();
    for check in Check::ALL {
        let skip = match check {
            Check::PathCover => !want_cover,
            Check::TreeFormula => formula,
            _ => false,
        };
        if skip {
            continue;
        }
        let (holds, detail) = match a.evaluate(check)? {
            Outcome::NotApplicable => continue,
            Outcome::Pass => (true, None),
            Outcome::Fail(d) => (false, Some(d)),
        };
        verdicts.push(Verdict {
            check,
            kind: check.kind(),
            statement: check.statement(),
            holds,
            detail,
        });
    }

    let profile = a.profile();
    let r_e = if opts.even_cycle_rank && g.size() <= MAX_EVEN_CYCLE_EDGES {
        Some(even_cycle_rank(g)?)
    } else {
        None
    };
    let method = match (tree, opts.method) {
        (true, Method::Formula) => "tree_formula",
        (true, Method::Both) => "both",
        _ => "bruteforce",
    };
    Ok(ParameterReport {
        n: g.order(),
        m: g.size(),
        edges: g.edge_list(),
        graph6: to_graph6(g),
        class: class.name(),
        r: g.cycle_rank(),
        delta: g.min_degree(),
        sigma: profile.sigma,
        ex: profile.ex,
        dim: dim.dim,
        dim_basis: dim.basis,
        dim_method: method,
        z: z.number,
        z_witness: z.witness,
        p: cover.as_ref().map(|c| c.len()),
        p_cover: cover.map(|c| c.blocks),
        r_e,
        predicates: Predicates {
            tree,
            path: g.is_path(),
            unicyclic: g.cycle_rank() == 1,
            complete: g.is_complete(),
            no_even_cycle: has_no_even_cycle(g),
            dim_eq_z_tree_condition: if tree {
                Some(dim_equals_z_tree_predicate(g, profile)?)
            } else {
                None
            },
        },
        verdicts,
        timing_ms: opts.timing.then(|| Timing {
            dim: dim_ms,
            z: z_ms,
            p: p_ms,
            total: ms(total),
        }),
    })
}
