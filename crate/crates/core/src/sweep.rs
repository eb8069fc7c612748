//! Runs checks over a corpus in parallel and aggregates the outcomes.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::checks::{confirm_conjecture_violation, Analysis, Caps, Check, CheckKind, Outcome};
use crate::error::{Error, Result};
use crate::even_cycle::has_no_even_cycle;
use crate::families::{t_plus_e_cases, Case, FamilySpec};
use crate::graph::{Graph, Vertex};
use crate::io::{to_edge_list, to_graph6};
use crate::unicyclic::{unicyclic_resolving_construction, ConstructionRule};

/// Witness lists keep at most this many examples; counts are exact.
pub const MAX_EXAMPLES: usize = 20;

/// A graph in a form that can be fed back to the parsers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct GraphRecord {
    pub n: usize,
    pub m: usize,
    pub edges: Vec<[Vertex; 2]>,
    pub graph6: String,
    pub edge_list: String,
}

impl GraphRecord {
    pub fn of(g: &Graph) -> Self {
        Self {
            n: g.order(),
            m: g.size(),
            edges: g.edge_list(),
            graph6: to_graph6(g),
            edge_list: to_edge_list(g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Origin {
    pub tree: GraphRecord,
    pub edge: [Vertex; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: Check,
    pub kind: CheckKind,
    pub statement: &'static str,
    pub detail: String,
    pub graph: GraphRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<Origin>,
    /// For conjecture violations: whether three search orders agree.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub confirmed: Option<bool>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub statement: &'static str,
    pub kind: Option<CheckKind>,
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Witness {
    pub graph: GraphRecord,
    pub dim: usize,
    #[serde(rename = "Z")]
    pub z: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub origin: Option<Origin>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tree_dim: Option<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WitnessList {
    pub count: usize,
    pub examples: Vec<Witness>,
}

impl WitnessList {
    fn push(&mut self, w: Witness) {
        self.count += 1;
        self.examples.push(w);
    }

    fn finish(&mut self) {
        self.examples.sort();
        self.examples.truncate(MAX_EXAMPLES);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Extreme {
    pub value: i64,
    pub examples: Vec<Witness>,
}

impl Extreme {
    fn offer(&mut self, value: i64, w: &Witness) {
        if self.examples.is_empty() || value > self.value {
            self.value = value;
            self.examples = vec![w.clone()];
        } else if value == self.value {
            self.examples.push(w.clone());
        }
    }

    fn finish(&mut self) {
        self.examples.sort();
        self.examples.truncate(MAX_EXAMPLES);
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Divergence {
    #[serde(rename = "max_Z_minus_dim")]
    pub max_z_minus_dim: Extreme,
    #[serde(rename = "max_dim_minus_Z")]
    pub max_dim_minus_z: Extreme,
    /// Graphs without even cycles where dim(G) > Z(G).
    #[serde(rename = "even_cycle_free_dim_gt_Z")]
    pub even_cycle_free_dim_gt_z: WitnessList,
}

/// A fixed graph whose (dim, Z) is known in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnownValue {
    pub family: String,
    pub expected_dim: usize,
    #[serde(rename = "expected_Z")]
    pub expected_z: usize,
    pub dim: usize,
    #[serde(rename = "Z")]
    pub z: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepResult {
    pub corpus: String,
    pub caps: Caps,
    pub graphs_checked: usize,
    /// Disconnected or single-vertex inputs, left out of every tally.
    pub skipped: usize,
    pub checks: BTreeMap<Check, Tally>,
    pub violations: Vec<Violation>,
    pub extremal: BTreeMap<&'static str, WitnessList>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub divergence: Option<Divergence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub known_values: Vec<KnownValue>,
    pub elapsed_ms: Option<u64>,
}

impl SweepResult {
    /// Violations of theorem checks; these fail a run.
    pub fn theorem_failures(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.kind == CheckKind::Theorem)
    }

    pub fn conjecture_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.kind == CheckKind::Conjecture)
    }

    /// No theorem violation and every known value matched.
    pub fn theorems_hold(&self) -> bool {
        self.theorem_failures().next().is_none() && self.known_values.iter().all(|k| k.holds)
    }

    pub fn witnesses(&self, key: &str) -> usize {
        self.extremal.get(key).map_or(0, |w| w.count)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("sweep results serialize")
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub caps: Caps,
    pub divergence: bool,
    pub timing: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            caps: Caps::default(),
            divergence: false,
            timing: true,
        }
    }
}

pub const DIM_EQ_Z_PLUS_1: &str = "dim_eq_Z_plus_1";
pub const DIM_EQ_TREE_DIM_PLUS_1: &str = "dim_eq_dim_tree_plus_1";
pub const EX_INCREASE: &str = "ex_increase";
pub const CONJECTURE_EQUALITY: &str = "conjecture_equality";
/// T + e cases where neither cycle neighbour extends a one-subtree basis.
pub const CONSTRUCTION_FALLBACK: &str = "construction_fallback";

/// Refuses corpora that the selected checks cannot finish on.
fn validate(cases: &[Case], searches: bool, path_cover: bool, caps: &Caps) -> Result<()> {
    let largest = cases
        .iter()
        .filter(|c| c.graph.in_parameter_domain())
        .map(|c| c.graph.order())
        .max()
        .unwrap_or(0);
    if searches && largest > caps.search {
        return Err(Error::CapExceeded {
            what: "brute-force dim and Z",
            n: largest,
            cap: caps.search,
        });
    }
    if path_cover && largest > caps.path_cover {
        return Err(Error::CapExceeded {
            what: "path cover search",
            n: largest,
            cap: caps.path_cover,
        });
    }
    Ok(())
}

struct CaseResult {
    outcomes: Vec<(Check, Outcome)>,
    violations: Vec<Violation>,
    marks: Vec<(&'static str, Witness)>,
    divergence: Option<(Witness, bool)>,
}

fn origin_record(case: &Case) -> Option<Origin> {
    case.origin.as_ref().map(|o| Origin {
        tree: GraphRecord::of(&o.tree),
        edge: [o.edge.0, o.edge.1],
    })
}

fn witness(a: &Analysis, tree_dim: Option<usize>) -> Result<Witness> {
    Ok(Witness {
        graph: GraphRecord::of(a.graph()),
        dim: a.dim()?.dim,
        z: a.z()?.number,
        r: a.graph().cycle_rank(),
        origin: origin_record(a.case),
        tree_dim,
    })
}

fn run_case(case: &Case, checks: &[Check], opts: &SweepOptions) -> Result<CaseResult> {
    let a = Analysis::new(case, opts.caps);
    let mut out = CaseResult {
        outcomes: Vec::with_capacity(checks.len()),
        violations: Vec::new(),
        marks: Vec::new(),
        divergence: None,
    };
    for &check in checks {
        let outcome = a.evaluate(check)?;
        if let Outcome::Fail(detail) = &outcome {
            let confirmed = match check {
                Check::CycleRankConjecture => {
                    Some(confirm_conjecture_violation(a.graph(), opts.caps.search)?)
                }
                _ => None,
            };
            out.violations.push(Violation {
                check,
                kind: check.kind(),
                statement: check.statement(),
                detail: detail.clone(),
                graph: GraphRecord::of(a.graph()),
                origin: origin_record(case),
                confirmed,
            });
        }
        if outcome == Outcome::NotApplicable {
            out.outcomes.push((check, outcome));
            continue;
        }
        match check {
            Check::DimZPlus1 if a.dim()?.dim == a.z()?.number + 1 => {
                out.marks.push((DIM_EQ_Z_PLUS_1, witness(&a, None)?));
            }
            Check::UnicyclicBounds => {
                let (dim, ex) = (a.dim()?.dim, a.profile().ex);
                for s in a.splits()? {
                    if dim == s.tree_dim + 1 {
                        out.marks
                            .push((DIM_EQ_TREE_DIM_PLUS_1, witness(&a, Some(s.tree_dim))?));
                    }
                    if ex > s.tree_ex {
                        out.marks
                            .push((EX_INCREASE, witness(&a, Some(s.tree_dim))?));
                    }
                }
            }
            Check::Construction => {
                for s in a.splits()? {
                    let c = unicyclic_resolving_construction(&s.tree, s.edge)?;
                    if c.rule == ConstructionRule::SingleSubtreeSearch {
                        out.marks
                            .push((CONSTRUCTION_FALLBACK, witness(&a, Some(s.tree_dim))?));
                    }
                }
            }
            Check::CycleRankConjecture
                if a.dim()?.dim == a.z()?.number + a.graph().cycle_rank() =>
            {
                out.marks.push((CONJECTURE_EQUALITY, witness(&a, None)?));
            }
            _ => {}
        }
        out.outcomes.push((check, outcome));
    }
    if opts.divergence {
        out.divergence = Some((witness(&a, None)?, has_no_even_cycle(a.graph())));
    }
    Ok(out)
}

/// Evaluates `checks` on every case of the corpus.
pub fn run_sweep(
    corpus: impl Into<String>,
    cases: &[Case],
    checks: &[Check],
    opts: &SweepOptions,
) -> Result<SweepResult> {
    let start = Instant::now();
    validate(
        cases,
        !checks.is_empty() || opts.divergence,
        checks.contains(&Check::PathCover),
        &opts.caps,
    )?;
    let (usable, skipped): (Vec<&Case>, Vec<&Case>) =
        cases.iter().partition(|c| c.graph.in_parameter_domain());
    let results: Vec<CaseResult> = usable
        .par_iter()
        .map(|c| run_case(c, checks, opts))
        .collect::<Result<_>>()?;

    let mut tallies: BTreeMap<Check, Tally> = checks
        .iter()
        .map(|&c| {
            (
                c,
                Tally {
                    statement: c.statement(),
                    kind: Some(c.kind()),
                    ..Tally::default()
                },
            )
        })
        .collect();
    let mut extremal: BTreeMap<&'static str, WitnessList> = BTreeMap::new();
    if checks.contains(&Check::DimZPlus1) {
        extremal.entry(DIM_EQ_Z_PLUS_1).or_default();
    }
    if checks.contains(&Check::UnicyclicBounds) {
        extremal.entry(DIM_EQ_TREE_DIM_PLUS_1).or_default();
        extremal.entry(EX_INCREASE).or_default();
    }
    if checks.contains(&Check::CycleRankConjecture) {
        extremal.entry(CONJECTURE_EQUALITY).or_default();
    }
    if checks.contains(&Check::Construction) {
        extremal.entry(CONSTRUCTION_FALLBACK).or_default();
    }
    let mut violations = Vec::new();
    let mut divergence = opts.divergence.then(Divergence::default);

    for r in results {
        for (check, outcome) in r.outcomes {
            let t = tallies.get_mut(&check).expect("tally per selected check");
            match outcome {
                Outcome::Pass => t.passed += 1,
                Outcome::Fail(_) => t.failed += 1,
                Outcome::NotApplicable => t.not_applicable += 1,
            }
        }
        violations.extend(r.violations);
        let mut seen = Vec::new();
        for (key, w) in r.marks {
            // one mark per graph and key, even with several cycle edges
            if !seen.contains(&key) {
                seen.push(key);
                extremal.entry(key).or_default().push(w);
            }
        }
        if let (Some(d), Some((w, no_even))) = (divergence.as_mut(), r.divergence) {
            let diff = w.z as i64 - w.dim as i64;
            d.max_z_minus_dim.offer(diff, &w);
            d.max_dim_minus_z.offer(-diff, &w);
            if no_even && w.dim > w.z {
                d.even_cycle_free_dim_gt_z.push(w);
            }
        }
    }
    extremal.values_mut().for_each(WitnessList::finish);
    if let Some(d) = divergence.as_mut() {
        d.max_z_minus_dim.finish();
        d.max_dim_minus_z.finish();
        d.even_cycle_free_dim_gt_z.finish();
    }
    violations.sort_by(|a, b| (a.check, &a.graph, &a.origin).cmp(&(b.check, &b.graph, &b.origin)));

    Ok(SweepResult {
        corpus: corpus.into(),
        caps: opts.caps,
        graphs_checked: usable.len(),
        skipped: skipped.len(),
        checks: tallies,
        violations,
        extremal,
        divergence,
        known_values: Vec::new(),
        elapsed_ms: opts.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Every tree on at most `n_max` vertices with every non-edge: both unicyclic
/// dim bounds, dim ≤ Z + 1 and the construction.
pub fn t_plus_e_sweep(n_max: usize, opts: &SweepOptions) -> Result<SweepResult> {
    if n_max > crate::families::MAX_ENUMERATION_ORDER {
        return Err(Error::CapExceeded {
            what: "tree enumeration",
            n: n_max,
            cap: crate::families::MAX_ENUMERATION_ORDER,
        });
    }
    let cases = t_plus_e_cases(3, n_max);
    run_sweep(
        format!("t_plus_e:3-{n_max}"),
        &cases,
        &[
            Check::UnicyclicBounds,
            Check::DimZPlus1,
            Check::Construction,
        ],
        opts,
    )
}

/// dim ≤ Z + r over the corpus, with equality cases collected.
pub fn cycle_rank_conjecture_check(
    corpus: impl Into<String>,
    cases: &[Case],
    opts: &SweepOptions,
) -> Result<SweepResult> {
    run_sweep(corpus, cases, &[Check::CycleRankConjecture], opts)
}

/// Largest gaps between dim and Z over the corpus, plus the grid values
/// dim(P_m □ P_n) = 2 and Z(P_m □ P_n) = min(m, n) at 3×3 and 4×4.
pub fn divergence_search(
    corpus: impl Into<String>,
    cases: &[Case],
    opts: &SweepOptions,
) -> Result<SweepResult> {
    let opts = SweepOptions {
        divergence: true,
        ..opts.clone()
    };
    let mut result = run_sweep(corpus, cases, &[], &opts)?;
    result.known_values = [(3, 3), (4, 4)]
        .into_iter()
        .map(|(m, n)| known_value(&FamilySpec::Grid(m, n), 2, m.min(n), &opts.caps))
        .collect::<Result<_>>()?;
    Ok(result)
}

/// Brute-force (dim, Z) of a single-graph family against expected values.
pub fn known_value(spec: &FamilySpec, dim: usize, z: usize, caps: &Caps) -> Result<KnownValue> {
    let case = spec.generate().remove(0);
    let a = Analysis::new(&case, *caps);
    let (d, zz) = (a.dim()?.dim, a.z()?.number);
    Ok(KnownValue {
        family: spec.to_string(),
        expected_dim: dim,
        expected_z: z,
        dim: d,
        z: zz,
        holds: d == dim && zz == z,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quiet() -> SweepOptions {
        SweepOptions {
            timing: false,
            ..SweepOptions::default()
        }
    }

    #[test]
    fn tallies_cover_the_corpus() {
        let cases: Vec<Case> = "all_connected:2-5"
            .parse::<FamilySpec>()
            .unwrap()
            .generate();
        let r = run_sweep("c", &cases, &Check::ALL, &quiet()).unwrap();
        assert_eq!(r.graphs_checked, 1 + 2 + 6 + 21);
        for t in r.checks.values() {
            assert_eq!(t.passed + t.failed + t.not_applicable, r.graphs_checked);
        }
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn small_t_plus_e_sweep() {
        let r = t_plus_e_sweep(6, &quiet()).unwrap();
        assert!(r.theorems_hold());
        assert!(r.witnesses(DIM_EQ_TREE_DIM_PLUS_1) >= 1);
        assert_eq!(r.checks[&Check::Construction].passed, r.graphs_checked);
    }

    #[test]
    fn skips_disconnected_inputs() {
        let cases = vec![
            Case::from(Graph::empty(3)),
            Case::from(Graph::new(3, [(0, 1), (1, 2)]).unwrap()),
        ];
        let r = run_sweep("x", &cases, &[Check::MinDegree], &quiet()).unwrap();
        assert_eq!((r.graphs_checked, r.skipped), (1, 1));
    }

    #[test]
    fn caps_are_enforced_up_front() {
        let cases: Vec<Case> = "path:20".parse::<FamilySpec>().unwrap().generate();
        assert!(matches!(
            run_sweep("p", &cases, &[Check::MinDegree], &quiet()),
            Err(Error::CapExceeded { n: 20, .. })
        ));
    }

    #[test]
    fn output_is_deterministic() {
        let cases: Vec<Case> = "all_connected:5".parse::<FamilySpec>().unwrap().generate();
        let a = cycle_rank_conjecture_check("c", &cases, &quiet()).unwrap();
        let b = cycle_rank_conjecture_check("c", &cases, &quiet()).unwrap();
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
        assert!(a.witnesses(CONJECTURE_EQUALITY) > 0);
    }
}
