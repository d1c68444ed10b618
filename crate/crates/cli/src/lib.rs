//! Command-line front end: generate point sets, analyze and verify
//! geometries, export graphs, and search random instances.

pub mod search;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use convexdim::dimension::{
    analyze, analyze_points, copoint_graph_dot, copoint_poset_dot, critical_digraph_dot,
    verify_suite, Analysis, AnalysisOptions, AnalysisReport, LawOutcome,
};
use convexdim::geometry::{compose, es_guarded, random_general_position, xes_guarded};
use convexdim::io::{
    geometry_to_json, parse_input, parse_point_set, point_set_to_json, report_to_json, Input,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use search::{run_search, Budget, RunConfig};

/// Largest random point set generated without `--unsafe-large`.
pub const RANDOM_MAX_N: usize = 200;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_LAW: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "convexdim",
    version,
    about = "Convex geometries, their lattices and dimensions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a point set as JSON.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
        /// Lift the size guards.
        #[arg(long, global = true)]
        unsafe_large: bool,
    },
    /// Analyze a point-set or closed-set file; prints the report.
    Analyze {
        file: PathBuf,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Write PREFIX_copoint_graph.dot, PREFIX_critical_digraph.dot and
        /// PREFIX_copoint_poset.dot.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Print the law table for a point-set or closed-set file.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Analyze random point sets looking for chiH > chiG; prints a summary.
    Search {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Wall-clock budget in seconds.
        #[arg(long, conflicts_with = "count")]
        budget: Option<u64>,
        /// Number of instances; makes the summary reproducible.
        #[arg(long)]
        count: Option<usize>,
        /// Analyze the JSON files in this directory instead.
        #[arg(long)]
        from_dir: Option<PathBuf>,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
    /// Print one view of a file: a DOT graph or the closed-set family.
    Export {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ExportKind::CopointGraph)]
        kind: ExportKind,
        #[command(flatten)]
        analysis: AnalysisArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum GenerateKind {
    Es {
        i: usize,
        j: usize,
    },
    Xes {
        k: usize,
    },
    /// Compose two point-set files, the second placed to the right.
    Compose {
        left: PathBuf,
        right: PathBuf,
    },
    Random {
        n: usize,
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExportKind {
    CopointGraph,
    CriticalDigraph,
    CopointPoset,
    /// Closed-set family JSON.
    Family,
}

#[derive(Debug, Args)]
pub struct AnalysisArgs {
    /// Longest cycle to enumerate; a cap that bites leaves dim unknown.
    #[arg(long)]
    pub cycle_cap: Option<usize>,
}

impl AnalysisArgs {
    fn options(&self) -> AnalysisOptions {
        AnalysisOptions {
            cycle_cap: self.cycle_cap,
        }
    }
}

/// Failure classes with their exit codes.
#[derive(Debug)]
pub enum Failure {
    Input(anyhow::Error),
    Law(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<convexdim::Error> for Failure {
    fn from(e: convexdim::Error) -> Self {
        Failure::Input(e.into())
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Law(_) => EXIT_LAW,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "error: {e:#}"),
            Failure::Law(msg) => write!(f, "law failure: {msg}"),
        }
    }
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

pub fn load_analysis(path: &Path, args: &AnalysisArgs) -> Result<Analysis, Failure> {
    let text = read(path)?;
    let input = parse_input(&text).with_context(|| format!("parsing {}", path.display()))?;
    let analysis = match input {
        Input::Points(p) => analyze_points(&p, &args.options())?,
        Input::Geometry(g) => analyze(g, None, &args.options())?,
    };
    Ok(analysis)
}

fn law_failures(laws: &[LawOutcome]) -> Result<(), Failure> {
    let failed: Vec<String> = laws
        .iter()
        .filter(|l| l.failed())
        .map(|l| l.to_string())
        .collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Law(failed.join("; ")))
    }
}

fn generate(kind: &GenerateKind, unsafe_large: bool) -> Result<String, Failure> {
    let set = match kind {
        GenerateKind::Es { i, j } => es_guarded(*i, *j, !unsafe_large)?,
        GenerateKind::Xes { k } => xes_guarded(*k, !unsafe_large)?,
        GenerateKind::Compose { left, right } => {
            let l = parse_point_set(&read(left)?)
                .with_context(|| format!("parsing {}", left.display()))?;
            let r = parse_point_set(&read(right)?)
                .with_context(|| format!("parsing {}", right.display()))?;
            compose(&l, &r)?
        }
        GenerateKind::Random { n, seed } => {
            if *n == 0 {
                return Err(anyhow!("random point sets need n >= 1").into());
            }
            if *n > RANDOM_MAX_N && !unsafe_large {
                return Err(anyhow!(
                    "n = {n} exceeds {RANDOM_MAX_N}; pass --unsafe-large to allow it"
                )
                .into());
            }
            random_general_position(*n, &mut ChaCha8Rng::seed_from_u64(*seed))
        }
    };
    Ok(point_set_to_json(&set)?)
}

fn summary_line(r: &AnalysisReport) -> String {
    let opt = |v: Option<usize>| v.map_or("?".to_string(), |v| v.to_string());
    format!(
        "n={} closed_sets={} copoints={} critical_pairs={} atomic={} two_edge_connected={} dim={} chiG={} chiH={} b={} cdim={} large_hyperedges={}",
        r.n,
        r.closed_sets,
        r.copoints,
        r.critical_pairs,
        r.atomic,
        r.two_edge_connected,
        opt(r.dim),
        r.chi_g,
        opt(r.chi_h),
        r.b,
        r.cdim,
        r.large_hyperedges
    )
}

/// Runs one command, writing results to `out` and progress to `err`.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Input(e.into());
    match &cli.command {
        Command::Generate { kind, unsafe_large } => {
            out.write_all(generate(kind, *unsafe_large)?.as_bytes())
                .map_err(io)?;
        }
        Command::Analyze {
            file,
            report,
            dot,
            analysis,
        } => {
            let a = load_analysis(file, analysis)?;
            let full = a.report();
            let json = report_to_json(&full)?;
            match report {
                Some(path) => {
                    write_file(path, &json)?;
                    writeln!(out, "{}", summary_line(&full)).map_err(io)?;
                }
                None => out.write_all(json.as_bytes()).map_err(io)?,
            }
            if let Some(prefix) = dot {
                let base = prefix.display().to_string();
                write_file(
                    Path::new(&format!("{base}_copoint_graph.dot")),
                    &copoint_graph_dot(&a),
                )?;
                write_file(
                    Path::new(&format!("{base}_critical_digraph.dot")),
                    &critical_digraph_dot(&a),
                )?;
                write_file(
                    Path::new(&format!("{base}_copoint_poset.dot")),
                    &copoint_poset_dot(&a),
                )?;
            }
            law_failures(&full.laws)?;
        }
        Command::Verify { file, analysis } => {
            let a = load_analysis(file, analysis)?;
            let laws = verify_suite(&a);
            writeln!(out, "{}", summary_line(&AnalysisReport::new(&a, &laws))).map_err(io)?;
            for law in &laws {
                writeln!(out, "{law}").map_err(io)?;
            }
            for e in a.large_hyperedges() {
                let cycle: Vec<String> =
                    e.iter().map(|&i| a.pairs[i].render(&a.geometry)).collect();
                writeln!(out, "large hyperedge: {}", cycle.join(", ")).map_err(io)?;
            }
            law_failures(&laws)?;
        }
        Command::Search {
            seed,
            workers,
            max_n,
            budget,
            count,
            from_dir,
            analysis,
        } => {
            let budget = match (budget, count) {
                (_, Some(c)) => Budget::Count(*c),
                (Some(s), None) => Budget::Time(Duration::from_secs(*s)),
                (None, None) => Budget::Count(100),
            };
            let config = RunConfig {
                seed: *seed,
                max_n: *max_n,
                budget,
                cycle_cap: analysis.cycle_cap,
                workers: *workers,
                from_dir: from_dir.clone(),
            };
            // findings stream to the process stderr as workers produce them
            let summary = run_search(&config, &|line: &str| eprintln!("{line}"))?;
            writeln!(
                err,
                "{} instances, {} candidates",
                summary.instances,
                summary.candidates.len()
            )
            .map_err(io)?;
            let mut json = serde_json::to_string_pretty(
                &serde_json::to_value(&summary).map_err(anyhow::Error::from)?,
            )
            .map_err(anyhow::Error::from)?;
            json.push('\n');
            out.write_all(json.as_bytes()).map_err(io)?;
        }
        Command::Export {
            file,
            kind,
            analysis,
        } => {
            let a = load_analysis(file, analysis)?;
            let text = match kind {
                ExportKind::CopointGraph => copoint_graph_dot(&a),
                ExportKind::CriticalDigraph => critical_digraph_dot(&a),
                ExportKind::CopointPoset => copoint_poset_dot(&a),
                ExportKind::Family => geometry_to_json(&a.geometry)?,
            };
            out.write_all(text.as_bytes()).map_err(io)?;
        }
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{f}");
            f.exit_code()
        }
    }
}
