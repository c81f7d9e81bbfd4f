//! `bench`: runs a manifest of (instance, problem, solvers) lines and renders a TSV table.
//!
//! Manifest lines read `<instance> <partition|components> <algo>[,<algo>...]`;
//! relative paths resolve against the manifest's directory.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::ValueEnum;
use colourful::Problem;
use rayon::prelude::*;

use crate::dispatch::{self, Algo, Limits};
use crate::gen::read;
use crate::{load_instance, CliError, ProblemArg};

pub const HEADER: &str = "instance\tsolver\tproblem\toptimum\twall_ms\texplored\tstatus";

#[derive(Debug)]
struct Job {
    instance: PathBuf,
    label: String,
    problem: Problem,
    algo: Algo,
}

fn algo_name(a: Algo) -> String {
    a.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn parse_manifest(text: &str, base: &Path) -> Result<Vec<Job>, CliError> {
    let mut jobs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t: Vec<&str> = line.split('#').next().unwrap_or("").split_whitespace().collect();
        if t.is_empty() {
            continue;
        }
        let bad = |what: String| CliError::Parse(format!("manifest line {}: {what}", i + 1));
        let [path, problem, algos] = t.as_slice() else {
            return Err(bad("expected `<instance> <problem> <algo>[,<algo>...]`".into()));
        };
        let problem: Problem = ProblemArg::from_str(problem, true).map_err(bad)?.into();
        for a in algos.split(',') {
            jobs.push(Job {
                instance: base.join(path),
                label: path.to_string(),
                problem,
                algo: Algo::from_str(a, true).map_err(bad)?,
            });
        }
    }
    Ok(jobs)
}

fn run_job(job: &Job, limits: &Limits) -> String {
    let start = Instant::now();
    let outcome = load_instance(&job.instance)
        .and_then(|g| dispatch::solve(&g, job.problem, job.algo, None, None, limits).map_err(CliError::from));
    let ms = start.elapsed().as_secs_f64() * 1000.0;
    let (solver, optimum, explored, status) = match outcome {
        Ok(Some(r)) => (r.solver.to_string(), r.value.to_string(), r.explored.to_string(), "ok".to_string()),
        Ok(None) => (algo_name(job.algo), "-".into(), "-".into(), "infeasible".into()),
        Err(e) => (algo_name(job.algo), "-".into(), "-".into(), format!("error: {e}").replace(['\t', '\n'], " ")),
    };
    format!("{}\t{solver}\t{}\t{optimum}\t{ms:.3}\t{explored}\t{status}", job.label, job.problem)
}

pub fn run(manifest: &Path, jobs: usize, limits: &Limits) -> Result<String, CliError> {
    let base = manifest.parent().unwrap_or(Path::new("."));
    let work = parse_manifest(&read(manifest)?, base)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let rows: Vec<String> = pool.install(|| work.par_iter().map(|j| run_job(j, limits)).collect());
    let mut table = format!("{HEADER}\n");
    for row in rows {
        table.push_str(&row);
        table.push('\n');
    }
    Ok(table)
}
