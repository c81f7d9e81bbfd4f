//! Picks a solver for an instance and runs it.

use clap::ValueEnum;
use colourful::decomposition::{exact_tree_decomposition, to_nice, TreeDecomposition};
use colourful::fpt::{
    dp_components, dp_partition, greedy_vertex_cover, non_unique_vertices, solve_min_partition_nonunique,
    solve_partition_vc,
};
use colourful::oracle::{brute_min_deletions_by_partitions, brute_min_deletions_by_subsets, brute_min_partition_capped, DELETION_EDGE_CAP};
use colourful::poly::{solve_2cp_treewidth2_with, solve_two_coloured};
use colourful::{ColouredGraph, Problem, SolveError, SolveResult, SolverTag};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    Oracle,
    Matching,
    #[value(name = "tw2-2sat")]
    Tw2TwoSat,
    Dp,
    Vc,
    Nonunique,
}

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_tw: usize,
    pub max_colours: usize,
    pub max_vc: usize,
    pub max_q: usize,
    pub oracle_cap: usize,
}

#[derive(Debug, thiserror::Error)]
pub enum DispatchError {
    #[error("no applicable solver: {0}")]
    NoSolver(String),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// `None` means the instance has no solution within `k`.
pub type Outcome = Option<SolveResult>;

pub fn solve(
    g: &ColouredGraph,
    problem: Problem,
    algo: Algo,
    k: Option<usize>,
    td: Option<&TreeDecomposition>,
    limits: &Limits,
) -> Result<Outcome, DispatchError> {
    let algo = match algo {
        Algo::Auto => choose(g, problem, k, td, limits)?,
        a => a,
    };
    let partition_only = |name: &str| {
        if problem == Problem::Components {
            Err(DispatchError::NoSolver(format!("{name} solves the partition problem only")))
        } else {
            Ok(())
        }
    };
    let result = match algo {
        Algo::Auto => unreachable!("resolved above"),
        Algo::Oracle => run_oracle(g, problem, limits.oracle_cap)?,
        Algo::Matching => solve_two_coloured(g, problem)?,
        Algo::Tw2TwoSat => {
            partition_only("tw2-2sat")?;
            let k = k.unwrap_or(2);
            let td = match td {
                Some(td) => td.clone(),
                None => exact_tree_decomposition(g, 2)
                    .map_err(SolveError::from)?
                    .ok_or_else(|| DispatchError::NoSolver("treewidth exceeds 2".into()))?,
            };
            return match solve_2cp_treewidth2_with(g, &td)? {
                Some(p) => Ok(Some(SolveResult::partition(p.len(), p, SolverTag::TreewidthTwoSat, 0)).filter(|r| r.value <= k)),
                None if k <= 2 => Ok(None),
                None => Err(DispatchError::NoSolver(format!("tw2-2sat only decides k = 2, not k = {k}"))),
            };
        }
        Algo::Dp => {
            let td = match td {
                Some(td) => td.clone(),
                None => exact_tree_decomposition(g, limits.max_tw)
                    .map_err(SolveError::from)?
                    .ok_or_else(|| DispatchError::NoSolver(format!("treewidth exceeds {}", limits.max_tw)))?,
            };
            let ntd = to_nice(&td).map_err(SolveError::from)?;
            match problem {
                Problem::Partition => dp_partition(g, &ntd)?,
                Problem::Components => dp_components(g, &ntd)?,
            }
        }
        Algo::Vc => {
            partition_only("vc")?;
            solve_partition_vc(g)?
        }
        Algo::Nonunique => {
            partition_only("nonunique")?;
            solve_min_partition_nonunique(g)?
        }
    };
    Ok(Some(result).filter(|r| k.is_none_or(|k| r.value <= k)))
}

fn run_oracle(g: &ColouredGraph, problem: Problem, cap: usize) -> Result<SolveResult, SolveError> {
    Ok(match problem {
        Problem::Partition => brute_min_partition_capped(g, cap)?,
        Problem::Components if g.m() <= DELETION_EDGE_CAP => brute_min_deletions_by_subsets(g, DELETION_EDGE_CAP)?,
        Problem::Components => brute_min_deletions_by_partitions(g, cap)?,
    })
}

/// First applicable solver, cheapest guaranteed routes first.
pub fn choose(
    g: &ColouredGraph,
    problem: Problem,
    k: Option<usize>,
    td: Option<&TreeDecomposition>,
    limits: &Limits,
) -> Result<Algo, DispatchError> {
    if g.num_colours() <= 2 {
        return Ok(Algo::Matching);
    }
    let width = match td {
        Some(td) => Some(td.width()),
        None => exact_tree_decomposition(g, limits.max_tw).ok().flatten().map(|td| td.width()),
    };
    if problem == Problem::Partition && k == Some(2) && width.is_some_and(|w| w <= 2) {
        return Ok(Algo::Tw2TwoSat);
    }
    if width.is_some() && g.num_colours() <= limits.max_colours {
        return Ok(Algo::Dp);
    }
    if problem == Problem::Partition {
        if greedy_vertex_cover(g).len() <= limits.max_vc {
            return Ok(Algo::Vc);
        }
        if non_unique_vertices(g).len() <= limits.max_q {
            return Ok(Algo::Nonunique);
        }
    }
    let oracle_fits = match problem {
        Problem::Partition => g.n() <= limits.oracle_cap,
        Problem::Components => g.m() <= DELETION_EDGE_CAP || g.n() <= limits.oracle_cap,
    };
    if oracle_fits {
        return Ok(Algo::Oracle);
    }
    Err(DispatchError::NoSolver(format!(
        "n = {}, {} colours; raise --max-tw, --max-colours, --max-vc, --max-q or --oracle-cap",
        g.n(),
        g.num_colours()
    )))
}
