//! `egl`: generate graphs, check necessary conditions, verify labelings and
//! striations, lift them to disjoint unions, and search for new ones.
//!
//! Exit codes: 0 success or valid, 1 invalid or no witness, 2 usage, parse
//! or precondition errors.

use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use edge_graceful::search::{FamilySpec, SweepConfig};
use edge_graceful::{
    cartesian_product, conjecture_sweep, cycle, cycle_power, disjoint_union, graph_conditions,
    lift_striaeform, lift_theorem2, search_edge_graceful, search_striation, union_feasibility,
    verify_edge_graceful, verify_striation, EdgeLabeling, Lifted, MultiGraph, SearchBudget,
    SearchOutcome, Striation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const DEFAULT_MAX_NODES: u64 = 10_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "egl",
    version,
    about = "Edge-graceful labelings of 2r-regular multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a graph file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Report the necessary conditions for G, or for kG with --k.
    Check {
        graph: PathBuf,
        #[arg(long)]
        k: Option<u64>,
    },
    /// Verify an edge-graceful labeling.
    Verify { graph: PathBuf, labeling: PathBuf },
    /// Verify a striation.
    VerifyStriation { graph: PathBuf, striation: PathBuf },
    /// Lift a labeling or striation of G to kG.
    Lift {
        #[command(subcommand)]
        method: LiftKind,
    },
    /// Backtracking search for a labeling or striation.
    Search {
        #[command(subcommand)]
        kind: SearchKind,
    },
    /// Run every construction and search over a graph family.
    Sweep {
        /// Comma-separated graphs: C7, C7^2, K5, C3xC5.
        #[arg(long)]
        family: String,
        /// Comma-separated copy counts.
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Largest kG (in edges) attempted by direct search.
        #[arg(long, default_value_t = 12)]
        direct_max_edges: usize,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Cycle C_n.
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Cycle power C_n^k.
    CyclePower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Cartesian product of two graph files.
    Product { g1: PathBuf, g2: PathBuf },
    /// Disjoint union of k copies of a graph file.
    Union {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Debug, Args)]
struct LiftArgs {
    #[arg(long)]
    k: usize,
    graph: PathBuf,
    input: PathBuf,
    /// Write PREFIX.graph and PREFIX.lab instead of standard output.
    #[arg(short, long, value_name = "PREFIX")]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum LiftKind {
    /// Copy c gets labels shifted by c*q; needs gcd(r, kp) = 1.
    Theorem2(LiftArgs),
    /// Block construction from a striation; any odd k.
    Striae(LiftArgs),
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Node limit per search.
    #[arg(long, conflicts_with = "exhaustive")]
    max_nodes: Option<u64>,
    /// Search without a node limit.
    #[arg(long)]
    exhaustive: bool,
}

impl BudgetArgs {
    fn budget(&self, default: u64) -> Result<SearchBudget, CliError> {
        if self.exhaustive {
            return Ok(SearchBudget::exhaustive());
        }
        Ok(SearchBudget::limited(self.max_nodes.unwrap_or(default))?)
    }
}

#[derive(Debug, Args)]
struct SearchArgs {
    graph: PathBuf,
    #[command(flatten)]
    budget: BudgetArgs,
    #[command(flatten)]
    out: OutputArg,
}

#[derive(Debug, Subcommand)]
enum SearchKind {
    /// Edge-graceful labeling.
    Graceful(SearchArgs),
    /// Striation (2-factorization plus labeling).
    Striation(SearchArgs),
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Output file (default: standard output).
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Debug)]
enum CliError {
    Io(PathBuf, io::Error),
    Lib(edge_graceful::Error),
    Input(PathBuf, edge_graceful::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(path, e) => write!(f, "{}: {e}", path.display()),
        }
    }
}

impl From<edge_graceful::Error> for CliError {
    fn from(e: edge_graceful::Error) -> Self {
        CliError::Lib(e)
    }
}

/// `-` reads standard input.
fn read_text(path: &Path) -> Result<String, CliError> {
    let io_err = |e| CliError::Io(path.to_path_buf(), e);
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(io_err)?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph, CliError> {
    MultiGraph::from_text(&read_text(path)?).map_err(|e| CliError::Input(path.into(), e))
}

fn read_labeling(path: &Path, g: &MultiGraph) -> Result<EdgeLabeling<u64>, CliError> {
    EdgeLabeling::from_text(&read_text(path)?, g.vertex_count() as u64)
        .map_err(|e| CliError::Input(path.into(), e))
}

fn read_striation(path: &Path, g: &MultiGraph) -> Result<Striation<u64>, CliError> {
    Striation::from_text(&read_text(path)?, g.vertex_count() as u64)
        .map_err(|e| CliError::Input(path.into(), e))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => fs::write(path, text).map_err(|e| CliError::Io(path.into(), e)),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("<stdout>".into(), e)),
    }
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn emit_lift(
    out: &mut dyn Write,
    prefix: Option<&Path>,
    lifted: &Lifted<u64>,
) -> Result<(), CliError> {
    let (graph, labeling) = (lifted.union.to_text(), lifted.labeling.to_text());
    match prefix {
        Some(prefix) => {
            emit(out, Some(&with_extension(prefix, "graph")), &graph)?;
            emit(out, Some(&with_extension(prefix, "lab")), &labeling)
        }
        None => emit(
            out,
            None,
            &format!("# graph\n{graph}# labeling\n{labeling}"),
        ),
    }
}

fn report_search<W>(err: &mut dyn Write, outcome: &SearchOutcome<W>) -> i32 {
    let nodes = outcome.nodes_explored;
    let (status, code) = if outcome.is_found() {
        ("found", EXIT_OK)
    } else if outcome.is_none_exists() {
        ("none exists", EXIT_NEGATIVE)
    } else {
        ("budget exhausted", EXIT_NEGATIVE)
    };
    let _ = writeln!(err, "{status} ({nodes} nodes)");
    code
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let stdout_err = |e| CliError::Io("<stdout>".into(), e);
    match cli.command {
        Command::Gen { kind, out: target } => {
            let g = match kind {
                GenKind::Cycle { n } => cycle(n)?,
                GenKind::CyclePower { n, k } => cycle_power(n, k)?,
                GenKind::Product { g1, g2 } => {
                    cartesian_product(&read_graph(&g1)?, &read_graph(&g2)?)?
                }
                GenKind::Union { graph, k } => disjoint_union(&read_graph(&graph)?, k)?,
            };
            emit(out, target.output.as_deref(), &g.to_text())?;
            Ok(EXIT_OK)
        }
        Command::Check { graph, k } => {
            let g = read_graph(&graph)?;
            let report = match k {
                Some(k) => union_feasibility(&g, k)?,
                None => graph_conditions(&g)?,
            };
            writeln!(out, "{report}").map_err(stdout_err)?;
            Ok(if report.feasible() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Verify { graph, labeling } => {
            let g = read_graph(&graph)?;
            let l = read_labeling(&labeling, &g)?;
            let verdict = verify_edge_graceful(&g, &l)?;
            writeln!(out, "{verdict}").map_err(stdout_err)?;
            Ok(if verdict.is_valid() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::VerifyStriation { graph, striation } => {
            let g = read_graph(&graph)?;
            let s = read_striation(&striation, &g)?;
            let verdict = verify_striation(&g, &s)?;
            writeln!(out, "{verdict}").map_err(stdout_err)?;
            Ok(if verdict.is_valid() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Lift { method } => {
            let lifted = match method {
                LiftKind::Theorem2(args) => {
                    let g = read_graph(&args.graph)?;
                    let base = read_labeling(&args.input, &g)?;
                    (lift_theorem2(&g, &base, args.k)?, args.output)
                }
                LiftKind::Striae(args) => {
                    let g = read_graph(&args.graph)?;
                    let s = read_striation(&args.input, &g)?;
                    (lift_striaeform(&g, &s, args.k)?, args.output)
                }
            };
            emit_lift(out, lifted.1.as_deref(), &lifted.0)?;
            Ok(EXIT_OK)
        }
        Command::Search { kind } => match kind {
            SearchKind::Graceful(args) => {
                let g = read_graph(&args.graph)?;
                let outcome =
                    search_edge_graceful::<u64>(&g, args.budget.budget(DEFAULT_MAX_NODES)?)?;
                if let Some(l) = outcome.witness() {
                    emit(out, args.out.output.as_deref(), &l.to_text())?;
                }
                Ok(report_search(err, &outcome))
            }
            SearchKind::Striation(args) => {
                let g = read_graph(&args.graph)?;
                let outcome = search_striation::<u64>(&g, args.budget.budget(DEFAULT_MAX_NODES)?)?;
                if let Some(s) = outcome.witness() {
                    emit(out, args.out.output.as_deref(), &s.to_text())?;
                }
                Ok(report_search(err, &outcome))
            }
        },
        Command::Sweep {
            family,
            k,
            budget,
            direct_max_edges,
        } => {
            let family: FamilySpec = family.parse()?;
            let mut config = SweepConfig {
                direct_max_edges,
                ..SweepConfig::default()
            };
            if budget.exhaustive || budget.max_nodes.is_some() {
                config.budget = budget.budget(DEFAULT_MAX_NODES)?;
            }
            let report = conjecture_sweep(&family, &k, config)?;
            write!(out, "{report}").map_err(stdout_err)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
