//! Command-line front end for the co-maximal ideal graph toolkit.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use comaxdim::checks::{self, analyze_ring, SweepEntry};
use comaxdim::format::{self, ExportFormat};
use comaxdim::graph::Graph;
use comaxdim::report::{to_json, AnalysisReport, GraphReport, SweepReport, Timings};
use comaxdim::ring::RingSpec;
use comaxdim::{Caps, Error, OracleMode};

#[derive(Parser)]
#[command(
    name = "comaxdim",
    version,
    about = "Exact strong metric dimension of co-maximal ideal graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build every graph for one ring, solve exactly, and run all checks.
    Analyze(AnalyzeArgs),
    /// Analyze a family of rings and tabulate predicted against computed.
    Sweep(SweepArgs),
    /// Strong metric dimension of an arbitrary connected graph file.
    Graph(GraphArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Write the JSON report to PATH ("-" for stdout).
    #[arg(long, value_name = "PATH")]
    json: Option<String>,
    /// Require the brute-force oracle; graphs over the cap become errors.
    /// Without this flag the oracle still runs when the graph fits the cap.
    #[arg(long)]
    oracle: bool,
    /// Cap on enumerated ideals per ring (env COMAXDIM_ENUM_CAP).
    #[arg(long, value_name = "N", visible_alias = "enum-cap")]
    cap: Option<u64>,
    /// Cap on exact-solver vertex count (env COMAXDIM_SOLVE_CAP).
    #[arg(long, value_name = "N")]
    solve_cap: Option<usize>,
    /// Cap on brute-force vertex count (env COMAXDIM_BRUTE_CAP).
    #[arg(long, value_name = "N")]
    brute_cap: Option<usize>,
    /// Omit timings so repeated runs emit identical bytes.
    #[arg(long)]
    no_timings: bool,
}

impl CommonArgs {
    fn caps(&self) -> Result<Caps, Error> {
        let mut caps = Caps::from_env()?;
        if let Some(v) = self.cap {
            caps.enum_cap = v;
        }
        if let Some(v) = self.solve_cap {
            caps.solve_cap = v;
        }
        if let Some(v) = self.brute_cap {
            caps.brute_cap = v;
        }
        Ok(caps)
    }

    fn oracle_mode(&self) -> OracleMode {
        if self.oracle {
            OracleMode::Require
        } else {
            OracleMode::Auto
        }
    }

    fn timings(&self, started: Instant) -> Option<Timings> {
        (!self.no_timings).then(|| Timings {
            analyze_ms: started.elapsed().as_millis() as u64,
        })
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum ExportArg {
    Dot,
    Graph6,
    Json,
}

impl From<ExportArg> for ExportFormat {
    fn from(arg: ExportArg) -> Self {
        match arg {
            ExportArg::Dot => ExportFormat::Dot,
            ExportArg::Graph6 => ExportFormat::Graph6,
            ExportArg::Json => ExportFormat::Json,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum WhichGraph {
    /// The co-maximal ideal graph.
    Gamma,
    /// The strong resolving graph.
    Srg,
    /// Incomparability graph without isolated vertices (base graph if complete).
    GammaStar,
    /// Incomparability graph on the full vertex set.
    GammaStarStar,
    /// Class graph: same-class or incomparable-reduction pairs.
    GammaPrime,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Ring spec, e.g. "Z4 x Z4 x Z8", "F(9) x C3 x F", or "Z12".
    #[arg(long, value_name = "SPEC")]
    ring: String,
    /// Export a graph (to stdout, replacing the table) instead of the table.
    #[arg(long, value_name = "FORMAT")]
    export: Option<ExportArg>,
    /// Which graph to export.
    #[arg(long, value_name = "GRAPH", default_value = "gamma")]
    what: WhichGraph,
    /// Write the export to PATH instead of stdout.
    #[arg(long, value_name = "PATH", requires = "export")]
    out: Option<PathBuf>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct SweepArgs {
    /// Ring family: "reduced:A..B", "nonreduced:A..B", "list:S1;S2", "file:PATH".
    #[arg(long, value_name = "FAMILY")]
    family: String,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct GraphArgs {
    /// Graph file: graph6 (.g6/.graph6) or the JSON vertex/edge format.
    #[arg(long = "in", value_name = "PATH")]
    input: PathBuf,
    #[command(flatten)]
    common: CommonArgs,
}

enum CliError {
    Lib(Error),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) => match e {
                Error::ParseSpec(_)
                | Error::InvalidArgument(_)
                | Error::SpecMismatch(_)
                | Error::UnknownVertex(_) => 2,
                Error::EmptyGraph(_) => 3,
                Error::CapExceeded { .. } | Error::Overflow(_) => 4,
                Error::Disconnected(_) => 5,
                Error::UnsupportedFormat(_) | Error::InvalidGraphData(_) => 6,
            },
            CliError::Io(_) => 6,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Graph(args) => cmd_graph(args),
    }
}

fn write_output(target: &str, text: &str) -> CliResult<()> {
    if target == "-" {
        print!("{text}");
        Ok(())
    } else {
        std::fs::write(target, text)
            .map_err(|e| CliError::Io(format!("cannot write {target}: {e}")))
    }
}

fn cmd_analyze(args: AnalyzeArgs) -> CliResult<bool> {
    let caps = args.common.caps()?;
    let (spec, warnings) = RingSpec::parse_verbose(&args.ring)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let started = Instant::now();
    let analysis = analyze_ring(&spec, &caps, args.common.oracle_mode())?;
    let report = AnalysisReport::from_analysis(&analysis, args.common.timings(started))?;

    if let Some(format_arg) = args.export {
        let graph = match args.what {
            WhichGraph::Gamma => &analysis.derived.gamma,
            WhichGraph::Srg => &analysis.srg.graph,
            WhichGraph::GammaStar => &analysis.derived.gamma_star,
            WhichGraph::GammaStarStar => &analysis.derived.gamma_star_star,
            WhichGraph::GammaPrime => &analysis.derived.gamma_prime,
        };
        let mut text = format::export(graph, format_arg.into())?;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &args.out {
            Some(path) => write_output(&path.display().to_string(), &text)?,
            None => print!("{text}"),
        }
    } else if args.common.json.as_deref() != Some("-") {
        print!("{}", report.render_table());
    }
    if let Some(target) = &args.common.json {
        write_output(target, &to_json(&report))?;
    }
    Ok(report.all_pass)
}

/// Expand a family notation into ring specs.
fn parse_family(family: &str) -> CliResult<Vec<RingSpec>> {
    let (kind, rest) = family.split_once(':').ok_or_else(|| {
        CliError::Lib(Error::InvalidArgument(format!(
            "family `{family}` must look like reduced:2..6, nonreduced:2..4, list:..., or file:PATH"
        )))
    })?;
    let parse_range = |text: &str| -> CliResult<(usize, usize)> {
        let bad = || {
            CliError::Lib(Error::InvalidArgument(format!(
                "range `{text}` must look like A..B with 2 <= A <= B"
            )))
        };
        let (a, b) = text.split_once("..").ok_or_else(bad)?;
        let a: usize = a.trim().parse().map_err(|_| bad())?;
        let b: usize = b.trim().parse().map_err(|_| bad())?;
        if a < 2 || b < a {
            return Err(bad());
        }
        Ok((a, b))
    };
    let specs: Vec<RingSpec> = match kind.trim() {
        "reduced" => {
            let (a, b) = parse_range(rest)?;
            (a..=b)
                .map(|n| RingSpec::from_lengths(&vec![1; n]))
                .collect::<Result<_, _>>()?
        }
        "nonreduced" => {
            let (a, b) = parse_range(rest)?;
            (a..=b)
                .map(|n| RingSpec::from_lengths(&vec![2; n]))
                .collect::<Result<_, _>>()?
        }
        "list" => rest
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(RingSpec::parse)
            .collect::<Result<_, _>>()?,
        "file" => {
            let path = rest.trim();
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
            text.lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(RingSpec::parse)
                .collect::<Result<_, _>>()?
        }
        other => {
            return Err(CliError::Lib(Error::InvalidArgument(format!(
                "unknown family kind `{other}`; use reduced, nonreduced, list, or file"
            ))))
        }
    };
    if specs.is_empty() {
        return Err(CliError::Lib(Error::InvalidArgument(format!(
            "family `{family}` names no rings"
        ))));
    }
    Ok(specs)
}

fn cmd_sweep(args: SweepArgs) -> CliResult<bool> {
    let caps = args.common.caps()?;
    let oracle = args.common.oracle_mode();
    let specs = parse_family(&args.family)?;
    let started = Instant::now();
    let mut entries = Vec::with_capacity(specs.len());
    for spec in &specs {
        let analysis = analyze_ring(spec, &caps, oracle).map_err(|e| {
            eprintln!("ring {spec}: analysis failed");
            CliError::Lib(e)
        })?;
        let predicted = checks::predicted_sdim(spec)?;
        entries.push(SweepEntry {
            ring: spec.to_string(),
            regime: analysis.regime,
            vertices: analysis.derived.gamma.vertex_count() as u64,
            boundary: analysis.srg.base_indices.len() as u64,
            sdim: analysis.sdim.value as u64,
            predicted_sdim: u64::try_from(predicted)
                .map_err(|_| Error::Overflow("predicted strong metric dimension"))?,
            oracle_sdim: analysis.oracle_sdim.as_ref().map(|o| o.value as u64),
            all_pass: analysis.all_pass(),
            failed_checks: analysis.failed_checks(),
        });
    }
    let report = SweepReport::new(
        args.family.clone(),
        entries,
        args.common.timings(started),
    );
    if args.common.json.as_deref() != Some("-") {
        print!("{}", report.render_table());
    }
    if let Some(target) = &args.common.json {
        write_output(target, &to_json(&report))?;
    }
    Ok(report.all_pass)
}

/// Load a graph file, deciding the format by extension, then content.
fn load_graph(path: &Path) -> CliResult<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(|s| s.to_ascii_lowercase());
    let graph = match ext.as_deref() {
        Some("g6") | Some("graph6") => format::from_graph6(first_line(&text))?,
        Some("json") => format::from_json(&text)?,
        _ => {
            if text.trim_start().starts_with('{') {
                format::from_json(&text)?
            } else {
                format::from_graph6(first_line(&text))?
            }
        }
    };
    Ok(graph)
}

fn first_line(text: &str) -> &str {
    text.lines().find(|l| !l.trim().is_empty()).unwrap_or("")
}

fn cmd_graph(args: GraphArgs) -> CliResult<bool> {
    let caps = args.common.caps()?;
    let graph = load_graph(&args.input)?;
    let started = Instant::now();
    let report = GraphReport::from_graph(
        &graph,
        args.input.display().to_string(),
        &caps,
        args.common.oracle_mode(),
        args.common.timings(started),
    )?;
    if args.common.json.as_deref() != Some("-") {
        print!("{}", report.render_table());
    }
    if let Some(target) = &args.common.json {
        write_output(target, &to_json(&report))?;
    }
    Ok(report.all_pass)
}
