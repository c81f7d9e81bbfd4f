mod bench;
mod dispatch;
mod gen;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colourful::decomposition::{exact_tree_decomposition, parse_td, serialize_td, TreeDecomposition};
use colourful::io::{parse_instance, parse_solution, serialize_solution};
use colourful::{ColouredGraph, EdgeSet, Partition, Problem, Witness};

use dispatch::{Algo, DispatchError, Limits};
use gen::read;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    NoSolver(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Io(_) | CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::NoSolver(_) => 3,
        }
    }
}

impl From<DispatchError> for CliError {
    fn from(e: DispatchError) -> Self {
        CliError::NoSolver(e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Partition,
    Components,
}

impl From<ProblemArg> for Problem {
    fn from(p: ProblemArg) -> Problem {
        match p {
            ProblemArg::Partition => Problem::Partition,
            ProblemArg::Components => Problem::Components,
        }
    }
}

#[derive(Clone, Copy, Debug, Args)]
pub struct LimitArgs {
    /// Largest treewidth the decomposition DP will attempt.
    #[arg(long, default_value_t = 4)]
    max_tw: usize,
    /// Largest number of colours the decomposition DP will attempt.
    #[arg(long, default_value_t = 6)]
    max_colours: usize,
    /// Largest greedy vertex cover for the kernel pipeline.
    #[arg(long, default_value_t = 4)]
    max_vc: usize,
    /// Largest number of vertices with a repeated colour for the DCS pipeline.
    #[arg(long, default_value_t = 5)]
    max_q: usize,
    /// Largest vertex count for the brute-force oracle.
    #[arg(long, default_value_t = 12)]
    oracle_cap: usize,
}

impl From<LimitArgs> for Limits {
    fn from(a: LimitArgs) -> Limits {
        Limits {
            max_tw: a.max_tw,
            max_colours: a.max_colours,
            max_vc: a.max_vc,
            max_q: a.max_q,
            oracle_cap: a.oracle_cap,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "colourful", version, about = "Exact solvers for colourful partition and colourful components")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance and print the solution.
    Solve {
        instance: PathBuf,
        #[arg(long, value_enum)]
        problem: ProblemArg,
        /// Report `infeasible` when the optimum exceeds this value.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Algo::Auto)]
        algo: Algo,
        /// Tree decomposition to use instead of computing one.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Also write the solution here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Validate a solution file against an instance.
    Check {
        instance: PathBuf,
        solution: PathBuf,
        /// Require the solution value to be at most this.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate an instance from one of the reduction families.
    Gen {
        #[command(subcommand)]
        family: gen::Family,
        /// Output path; a `.meta.jsonl` sidecar is written next to it.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run every (instance, solver) pair of a manifest and print a TSV table.
    Bench {
        manifest: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Emit an exact tree decomposition, or validate one with `--check`.
    Td {
        instance: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_width: usize,
        #[arg(long)]
        check: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_instance(path: &Path) -> Result<ColouredGraph, CliError> {
    parse_instance(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_td(path: &Path, g: &ColouredGraph) -> Result<TreeDecomposition, CliError> {
    let td = parse_td(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    td.check(g).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    Ok(td)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    if let Some(path) = out {
        fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    print!("{text}");
    Ok(())
}

fn cmd_solve(
    instance: &Path,
    problem: Problem,
    k: Option<usize>,
    algo: Algo,
    td: Option<&Path>,
    out: Option<&Path>,
    limits: &Limits,
) -> Result<(), CliError> {
    let g = load_instance(instance)?;
    let td = td.map(|p| load_td(p, &g)).transpose()?;
    match dispatch::solve(&g, problem, algo, k, td.as_ref(), limits)? {
        Some(r) => {
            let mut text = serialize_solution(&r.witness);
            let _ = writeln!(text, "# solver {} explored {}", r.solver, r.explored);
            emit(&text, out)
        }
        None => emit(&format!("infeasible\n# no solution with value at most {}\n", k.unwrap_or(0)), out),
    }
}

/// First reason `p` is not a colourful partition of `g`, if any.
fn partition_defect(g: &ColouredGraph, p: &Partition) -> Option<String> {
    let mut seen = vec![false; g.n()];
    for (i, block) in p.blocks().iter().enumerate() {
        if let Some(&v) = block.iter().find(|&&v| v >= g.n()) {
            return Some(format!("block {i}: vertex {v} is not in the instance"));
        }
        for &v in block {
            seen[v] = true;
        }
        if !g.is_colourful_set(block) {
            return Some(format!("block {i} repeats a colour"));
        }
        if !g.is_connected_set(block) {
            return Some(format!("block {i} is not connected"));
        }
    }
    seen.iter().position(|&s| !s).map(|v| format!("vertex {v} is in no block"))
}

fn deletion_defect(g: &ColouredGraph, f: &EdgeSet) -> Option<String> {
    if let Some(&(u, v)) = f.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        return Some(format!("{u}-{v} is not an edge of the instance"));
    }
    let h = g.without_edges(f).ok()?;
    h.components()
        .iter()
        .find(|c| !h.is_colourful_set(c))
        .map(|c| format!("the component containing vertex {} repeats a colour", c[0]))
}

fn cmd_check(instance: &Path, solution: &Path, k: Option<usize>) -> Result<(), CliError> {
    let g = load_instance(instance)?;
    let sol = parse_solution(&read(solution)?).map_err(|e| CliError::Parse(format!("{}: {e}", solution.display())))?;
    let (size, defect) = match &sol.witness {
        Witness::Partition(p) => (p.len(), partition_defect(&g, p)),
        Witness::Deletions(f) => (f.len(), deletion_defect(&g, f)),
    };
    if let Some(d) = defect {
        return Err(CliError::Invalid(d));
    }
    if size != sol.claimed {
        return Err(CliError::Invalid(format!("claimed value {} but the witness has size {size}", sol.claimed)));
    }
    if let Some(k) = k.filter(|&k| size > k) {
        return Err(CliError::Invalid(format!("value {size} exceeds k = {k}")));
    }
    println!("ok {size}");
    Ok(())
}

fn cmd_td(instance: &Path, max_width: usize, check: Option<&Path>, out: Option<&Path>) -> Result<(), CliError> {
    let g = load_instance(instance)?;
    if let Some(path) = check {
        let td = parse_td(&read(path)?).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        td.check(&g).map_err(|e| CliError::Invalid(e.to_string()))?;
        println!("ok width {}", td.width());
        return Ok(());
    }
    let td = exact_tree_decomposition(&g, max_width)
        .map_err(|e| CliError::NoSolver(e.to_string()))?
        .ok_or_else(|| CliError::NoSolver(format!("treewidth exceeds {max_width}")))?;
    emit(&serialize_td(&td), out)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve { instance, problem, k, algo, td, out, limits } => {
            cmd_solve(&instance, problem.into(), k, algo, td.as_deref(), out.as_deref(), &limits.into())
        }
        Command::Check { instance, solution, k } => cmd_check(&instance, &solution, k),
        Command::Gen { family, out } => gen::run(&family, out.as_deref()),
        Command::Bench { manifest, jobs, out, limits } => {
            let table = bench::run(&manifest, jobs, &limits.into())?;
            emit(&table, out.as_deref())
        }
        Command::Td { instance, max_width, check, out } => cmd_td(&instance, max_width, check.as_deref(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
