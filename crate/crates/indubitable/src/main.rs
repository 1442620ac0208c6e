//! Command-line surface. Subcommands: `analyze` for per-graph reports,
//! `generate` for the built-in families, `census` for streaming graph6
//! input, `verify` for named claim checks.
//!
//! Reports go to standard output as JSON (or text with `--format text`);
//! diagnostics and census summaries go to standard error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use indubitable::error::Error;
use indubitable::{graph, partitions, report};
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "indubitable",
    about = "Full indubitable partitions of regular graphs via two-valued spectral idempotents",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct GraphSource {
    /// Input file: graph6 (single line) or edge list; "-" reads standard input
    input: Option<String>,
    /// Generate the graph instead of reading it, e.g. "cycle:6", "grid:3,4",
    /// "multipartite:2,2,2", "crown:4", "complete:5", "cycle-complete:4,5"
    #[arg(long, value_name = "SPEC")]
    family: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one graph: spectrum, full indubitable partitions, classifications
    Analyze {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = indubitable::DEFAULT_TOL)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generate a graph from a family spec and print it as graph6
    Generate {
        /// Family spec, e.g. "cycle:6" or "grid:3,4"
        #[arg(long, value_name = "SPEC")]
        family: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
    },
    /// Process a stream of graph6 lines, one census record per line of output
    Census {
        /// graph6 file, one graph per line; "-" reads standard input
        input: Option<String>,
        #[arg(long, default_value_t = indubitable::DEFAULT_TOL)]
        tol: f64,
        /// Emit records for all connected regular graphs, not only those
        /// with a full indubitable partition
        #[arg(long)]
        all: bool,
        /// Worker count (output is identical for any value)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run a named claim check on one graph
    Verify {
        /// Claim name; see --list
        claim: Option<String>,
        #[command(flatten)]
        source: GraphSource,
        /// Partition file (one cell per line, space-separated vertices)
        #[arg(long, value_name = "FILE")]
        partition: Option<PathBuf>,
        #[arg(long, default_value_t = indubitable::DEFAULT_TOL)]
        tol: f64,
        /// List the known claims and exit
        #[arg(long)]
        list: bool,
    },
}

fn read_source(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Precondition(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::Precondition(format!("reading {path}: {e}")))
    }
}

/// Graph from either a family spec or an input file. Files holding a single
/// non-numeric line are treated as graph6, otherwise as an edge list.
fn load_graph(source: &GraphSource) -> Result<graph::Graph, Error> {
    match (&source.family, &source.input) {
        (Some(spec), None) => graph::generate(&graph::FamilySpec::parse(spec)?),
        (None, Some(path)) => {
            let text = read_source(path)?;
            let trimmed = text.trim();
            let single_line = !trimmed.contains('\n');
            let looks_like_edge_list = trimmed
                .split_whitespace()
                .next()
                .is_some_and(|w| w.chars().all(|c| c.is_ascii_digit()));
            if single_line && !looks_like_edge_list {
                graph::parse_graph6(trimmed)
            } else {
                graph::parse_edge_list(&text)
            }
        }
        (Some(_), Some(_)) => {
            Err(Error::Precondition("give either --family or an input file, not both".into()))
        }
        (None, None) => Err(Error::Precondition("no graph given; use --family or a file".into())),
    }
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { source, tol, format } => {
            let g = load_graph(&source)?;
            let r = report::run_analyze(&g, tol)?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r).unwrap()),
                Format::Text => print!("{}", report::render_text(&r)),
            }
            if let Some(reason) = &r.degraded {
                return Err(Error::Precondition(reason.clone()));
            }
            Ok(())
        }
        Command::Generate { family, format } => {
            let g = graph::generate(&graph::FamilySpec::parse(&family)?)?;
            match format {
                GraphFormat::Graph6 => println!("{}", graph::write_graph6(&g)),
                GraphFormat::EdgeList => print!("{}", graph::write_edge_list(&g)),
            }
            Ok(())
        }
        Command::Census { input, tol, all, jobs } => {
            let text = read_source(input.as_deref().unwrap_or("-"))?;
            let lines: Vec<String> = text
                .lines()
                .filter(|l| !l.trim().is_empty())
                .map(|l| l.to_string())
                .collect();
            let opts = report::CensusOptions { tol, all, jobs };
            let (records, summary) = report::run_census(&lines, &opts)?;
            let mut out = String::new();
            for r in &records {
                out.push_str(&serde_json::to_string(r).unwrap());
                out.push('\n');
            }
            print!("{out}");
            eprintln!("{}", serde_json::to_string(&summary).unwrap());
            for line in &summary.failure_lines {
                eprintln!("line {line}: malformed graph6, skipped");
            }
            Ok(())
        }
        Command::Verify { claim, source, partition, tol, list } => {
            if list {
                for c in report::CLAIMS {
                    println!("{c}");
                }
                return Ok(());
            }
            let claim = claim
                .ok_or_else(|| Error::Precondition("no claim given; see --list".into()))?;
            let g = load_graph(&source)?;
            let pi = match &partition {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| {
                        Error::Precondition(format!("reading {}: {e}", path.display()))
                    })?;
                    Some(partitions::Partition::parse(&text, g.n())?)
                }
                None => None,
            };
            let outcome = report::verify_claim(&claim, &g, pi.as_ref(), tol)?;
            println!("{}", serde_json::to_string_pretty(&outcome).unwrap());
            if outcome.passed {
                Ok(())
            } else {
                Err(Error::Consistency(format!("claim {claim} failed")))
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
