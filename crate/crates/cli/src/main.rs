mod caps;
mod summary;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dimforce_core::checks::Check;
use dimforce_core::families::{Case, FamilySpec};
use dimforce_core::io::{parse_any, to_edge_list, to_graph6};
use dimforce_core::report::{compute_case_report, Method, ReportOptions};
use dimforce_core::suite::{parse_fixtures, verify_paper_suite, SuiteCaps, SuiteConfig};
use dimforce_core::sweep::{divergence_search, run_sweep, GraphRecord, SweepOptions};
use dimforce_core::Error;

use caps::{Limits, ENUMERATION_BIG};

#[derive(Parser)]
#[command(
    name = "dimforce",
    version,
    about = "Metric dimension and zero forcing of small graphs"
)]
struct Cli {
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parameters, witnesses and bound verdicts for each input graph.
    Compute(ComputeArgs),
    /// Run checks over a family or corpus.
    Sweep(SweepArgs),
    /// Run the built-in verification suite.
    VerifyPaper(VerifyArgs),
    /// Write the members of a family.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct Source {
    /// Edge-list or graph6 file; `-` reads stdin.
    #[arg(long, value_name = "FILE", conflicts_with = "family")]
    corpus: Option<PathBuf>,
    /// Family such as path:5, grid:3,3 or all_trees:4-9.
    #[arg(long, value_name = "NAME:ARGS")]
    family: Option<String>,
    /// Allow all_connected families up to 8 vertices.
    #[arg(long)]
    big: bool,
}

#[derive(Args)]
struct SearchCaps {
    /// Largest order for brute-force dim and Z.
    #[arg(long, value_name = "N")]
    cap: Option<usize>,
    /// Largest order for the path cover search.
    #[arg(long, value_name = "N")]
    path_cover_cap: Option<usize>,
}

#[derive(Args)]
struct ComputeArgs {
    /// Input file, as an alternative to --corpus.
    #[arg(value_name = "FILE", conflicts_with_all = ["corpus", "family"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    caps: SearchCaps,
    #[arg(long, value_enum, default_value_t = MethodArg::Bruteforce)]
    method: MethodArg,
    /// Also compute a minimum path cover.
    #[arg(long)]
    path_cover: bool,
    /// Also compute the even cycle rank.
    #[arg(long)]
    even_cycle_rank: bool,
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    caps: SearchCaps,
    /// Comma-separated check names, or `all`.
    #[arg(long, default_value = "all", value_name = "LIST")]
    check: String,
    /// Also record the largest gaps between dim and Z.
    #[arg(long)]
    divergence: bool,
    #[arg(long)]
    no_timing: bool,
    /// JSON result file; without it the JSON goes to stdout and the summary to stderr.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Per-check tallies as CSV.
    #[arg(long, value_name = "FILE")]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Lower every exhaustive sweep to at most N vertices.
    #[arg(long, value_name = "N")]
    caps: Option<usize>,
    /// Extra fixtures: a JSON array of {name, statement, family | n + edges, dim, Z, r?}.
    #[arg(long, value_name = "FILE")]
    fixtures: Option<PathBuf>,
    #[arg(long)]
    no_timing: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// Family such as grid:3,3.
    #[arg(long, value_name = "NAME:ARGS")]
    family: String,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    #[arg(long)]
    big: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Bruteforce,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Bruteforce => Method::Bruteforce,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
    Json,
}

/// How a finished command should exit.
enum Status {
    Ok,
    TheoremFailure,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::TheoremFailure) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<Status> {
    if let Some(k) = cli.workers {
        if k == 0 {
            bail!("--workers must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .context("cannot start the worker pool")?;
    }
    let mut limits = Limits::from_env()?;
    match cli.command {
        Command::Compute(a) => compute(a, &mut limits),
        Command::Sweep(a) => sweep(a, &mut limits),
        Command::VerifyPaper(a) => verify(a, &limits),
        Command::Generate(a) => generate(a, &mut limits),
    }
}

impl SearchCaps {
    fn apply(&self, limits: &mut Limits) {
        if let Some(n) = self.cap {
            limits.search.search = n;
        }
        if let Some(n) = self.path_cover_cap {
            limits.search.path_cover = n;
        }
    }
}

/// Points a cap error at the flag that lifts it.
fn explain(e: Error) -> anyhow::Error {
    let hint = match &e {
        Error::CapExceeded { what, n, .. } if what.contains("path cover") => {
            format!("; rerun with --path-cover-cap {n} to allow it")
        }
        Error::CapExceeded { what, .. } if what.contains("enumeration") => {
            "; choose a smaller family".to_string()
        }
        Error::CapExceeded { n, .. } => format!("; rerun with --cap {n} to allow it"),
        _ => String::new(),
    };
    anyhow::anyhow!("{e}{hint}")
}

fn parse_family(spec: &str, big: bool, limits: &mut Limits) -> Result<FamilySpec> {
    let family: FamilySpec = spec
        .parse()
        .map_err(|e: Error| anyhow::anyhow!("--family: {e}"))?;
    if big {
        limits.enumeration = limits.enumeration.max(ENUMERATION_BIG);
    }
    if let FamilySpec::AllConnected { max, .. } = family {
        if max > limits.enumeration {
            bail!(
                "--family {spec}: all_connected is limited to {} vertices; pass --big for {ENUMERATION_BIG}",
                limits.enumeration
            );
        }
    }
    Ok(family)
}

fn read_corpus(path: &Path) -> Result<Vec<Case>> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .context("cannot read stdin")?;
    } else {
        text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
    }
    let graphs = parse_any(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    if graphs.is_empty() {
        bail!("{}: no graphs found", path.display());
    }
    Ok(graphs.into_iter().map(Case::from).collect())
}

/// The cases named by --corpus or --family, with a corpus label.
fn load(
    source: &Source,
    file: Option<&PathBuf>,
    limits: &mut Limits,
) -> Result<(String, Vec<Case>)> {
    if let Some(path) = file.or(source.corpus.as_ref()) {
        return Ok((path.display().to_string(), read_corpus(path)?));
    }
    let Some(spec) = &source.family else {
        bail!("give an input with --corpus FILE or --family NAME:ARGS");
    };
    let family = parse_family(spec, source.big, limits)?;
    Ok((family.to_string(), family.generate()))
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values print");
    s.push('\n');
    s
}

fn compute(a: ComputeArgs, limits: &mut Limits) -> Result<Status> {
    a.caps.apply(limits);
    let (_, cases) = load(&a.source, a.input.as_ref(), limits)?;
    let opts = ReportOptions {
        method: a.method.into(),
        path_cover: a.path_cover,
        caps: limits.search,
        timing: !a.no_timing,
        even_cycle_rank: a.even_cycle_rank,
    };
    let mut reports = Vec::with_capacity(cases.len());
    for (i, case) in cases.iter().enumerate() {
        let r = compute_case_report(case, &opts)
            .map_err(|e| explain(e).context(format!("graph {}", i + 1)))?;
        reports.push(r);
    }
    let failed = reports.iter().any(|r| r.failed_theorems().next().is_some());
    for r in &reports {
        for v in r.failed_theorems() {
            eprintln!(
                "theorem violated: {}: {} on graph6 {}",
                v.check, v.statement, r.graph6
            );
        }
    }
    let value = match reports.len() {
        1 => reports[0].to_json(),
        _ => serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect()),
    };
    emit(a.out.as_ref(), &json_text(&value))?;
    Ok(if failed {
        Status::TheoremFailure
    } else {
        Status::Ok
    })
}

fn sweep(a: SweepArgs, limits: &mut Limits) -> Result<Status> {
    a.caps.apply(limits);
    let checks = Check::parse_list(&a.check).map_err(|e| anyhow::anyhow!("--check: {e}"))?;
    let (corpus, cases) = load(&a.source, None, limits)?;
    let opts = SweepOptions {
        caps: limits.search,
        divergence: a.divergence,
        timing: !a.no_timing,
    };
    let result = if a.divergence {
        let mut r = divergence_search(corpus.clone(), &cases, &opts).map_err(explain)?;
        if !checks.is_empty() {
            let checked = run_sweep(corpus, &cases, &checks, &opts).map_err(explain)?;
            r.checks = checked.checks;
            r.violations = checked.violations;
            r.extremal.extend(checked.extremal);
        }
        r
    } else {
        run_sweep(corpus, &cases, &checks, &opts).map_err(explain)?
    };
    let summary = summary::sweep_summary(&result);
    let json = json_text(&result.to_json());
    match &a.out {
        Some(path) => {
            emit(Some(path), &json)?;
            print!("{summary}");
        }
        None => {
            eprint!("{summary}");
            emit(None, &json)?;
        }
    }
    if let Some(path) = &a.csv {
        summary::write_tally_csv(path, &result.checks)?;
    }
    for v in result.theorem_failures() {
        eprintln!(
            "theorem violated: {}: {} on graph6 {}: {}",
            v.check, v.statement, v.graph.graph6, v.detail
        );
    }
    Ok(if result.theorems_hold() {
        Status::Ok
    } else {
        Status::TheoremFailure
    })
}

fn verify(a: VerifyArgs, limits: &Limits) -> Result<Status> {
    let mut config = SuiteConfig {
        caps: SuiteCaps::default(),
        search: limits.search,
        extra_fixtures: Vec::new(),
        timing: !a.no_timing,
    };
    if let Some(n) = a.caps {
        config.caps = config.caps.lowered_to(n);
    }
    if let Some(path) = &a.fixtures {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("cannot read {}", path.display()))?;
        config.extra_fixtures =
            parse_fixtures(&text).map_err(|e| anyhow::anyhow!("{}: {e}", path.display()))?;
    }
    let report = verify_paper_suite(&config).map_err(explain)?;
    if let Some(path) = &a.out {
        emit(Some(path), &json_text(&report.to_json()))?;
    }
    print!("{}", summary::tally_table(&report.checks));
    let fixtures_ok = report.fixtures.iter().filter(|f| f.holds).count();
    println!("fixtures: {fixtures_ok}/{} match", report.fixtures.len());
    let reqs_ok = report.requirements.iter().filter(|r| r.holds).count();
    println!("requirements: {reqs_ok}/{} hold", report.requirements.len());
    for line in report.failure_lines() {
        eprintln!("FAIL {line}");
    }
    println!(
        "{}",
        if report.passed {
            "all checks pass"
        } else {
            "FAILED"
        }
    );
    Ok(if report.passed {
        Status::Ok
    } else {
        Status::TheoremFailure
    })
}

fn generate(a: GenerateArgs, limits: &mut Limits) -> Result<Status> {
    let family = parse_family(&a.family, a.big, limits)?;
    let graphs: Vec<_> = family.generate().into_iter().map(|c| c.graph).collect();
    let text = match a.format {
        Format::Edgelist => graphs
            .iter()
            .map(to_edge_list)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Graph6 => graphs.iter().map(|g| to_graph6(g) + "\n").collect(),
        Format::Json => {
            let records: Vec<GraphRecord> = graphs.iter().map(GraphRecord::of).collect();
            json_text(&serde_json::to_value(records)?)
        }
    };
    emit(a.out.as_ref(), &text)?;
    Ok(Status::Ok)
}
