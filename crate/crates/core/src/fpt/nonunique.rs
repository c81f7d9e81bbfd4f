//! Colourful Partition parameterized by the number `q` of vertices whose
//! colour is shared with another vertex.

use std::collections::VecDeque;

use super::dcs::{dcs_search, DcsInstance};
use crate::error::SolveError;
use crate::graph::{colour_multiplicity, ColouredGraph, Partition, SolveResult, SolverTag, Witness};

pub const MAX_NON_UNIQUE: usize = 12;

/// Vertices whose colour appears at least twice.
pub fn non_unique_vertices(g: &ColouredGraph) -> Vec<usize> {
    let classes = g.colour_classes();
    (0..g.n()).filter(|&v| classes[g.colour(v)].len() > 1).collect()
}

/// A colourful partition with at most `k` blocks, or `None`.
pub fn solve_partition_nonunique(g: &ColouredGraph, k: usize) -> Result<Option<Partition>, SolveError> {
    let best = solve_min_partition_nonunique(g)?;
    match best.witness {
        Witness::Partition(p) if best.value <= k => Ok(Some(p)),
        _ => Ok(None),
    }
}

/// Minimum colourful partition, one component at a time, trying sizes upward.
pub fn solve_min_partition_nonunique(g: &ColouredGraph) -> Result<SolveResult, SolveError> {
    let q = non_unique_vertices(g).len();
    if q > MAX_NON_UNIQUE {
        return Err(SolveError::Limit(format!("{q} non-uniquely coloured vertices exceed {MAX_NON_UNIQUE}")));
    }
    let mut blocks = Vec::new();
    let mut explored = 0u64;
    for comp in g.components() {
        let (h, back) = g.induced(&comp);
        let start = colour_multiplicity(&h).max(1);
        let mut k = start;
        let p = loop {
            if let Some(p) = connected_at_most(&h, k, &mut explored)? {
                break p;
            }
            k += 1;
        };
        blocks.extend(p.blocks().iter().map(|b| b.iter().map(|&v| back[v]).collect::<Vec<_>>()));
    }
    let p = Partition::new(blocks)?;
    Ok(SolveResult::partition(p.len(), p, SolverTag::NonUniqueDcs, explored))
}

/// The decision version on a connected graph.
fn connected_at_most(g: &ColouredGraph, k: usize, explored: &mut u64) -> Result<Option<Partition>, SolveError> {
    if g.n() == 0 {
        return Ok(Some(Partition::new(vec![])?));
    }
    let q = non_unique_vertices(g);
    if k == 0 {
        return Ok(None);
    }
    if q.is_empty() {
        return Ok(Some(Partition::new(vec![(0..g.n()).collect()])?));
    }
    if k >= q.len() {
        return Ok(Some(grow_from(g, &q)?));
    }
    // Every block holds a terminal: a block of unique colours could merge into a neighbour.
    let mut labels = Vec::with_capacity(q.len());
    let mut found = None;
    enumerate(g, &q, k, &mut labels, &mut Vec::new(), &mut |groups| {
        if found.is_some() {
            return Ok(());
        }
        let inst = DcsInstance::new(g.clone(), groups.to_vec())?;
        if let Some(a) = dcs_search(&inst, explored)? {
            found = Some(Partition::from_labels(&a));
        }
        Ok(())
    })?;
    Ok(found)
}

/// Partitions of `q` into at most `k` colourful groups.
fn enumerate(
    g: &ColouredGraph,
    q: &[usize],
    k: usize,
    labels: &mut Vec<usize>,
    groups: &mut Vec<Vec<usize>>,
    f: &mut dyn FnMut(&[Vec<usize>]) -> Result<(), SolveError>,
) -> Result<(), SolveError> {
    let i = labels.len();
    if i == q.len() {
        return f(groups);
    }
    let v = q[i];
    for b in 0..=groups.len().min(k - 1) {
        if b == groups.len() {
            groups.push(vec![v]);
        } else if groups[b].iter().any(|&u| g.colour(u) == g.colour(v)) {
            continue;
        } else {
            groups[b].push(v);
        }
        labels.push(b);
        enumerate(g, q, k, labels, groups, f)?;
        labels.pop();
        if groups[b].len() == 1 {
            groups.pop();
        } else {
            groups[b].pop();
        }
    }
    Ok(())
}

/// One block per terminal; every other vertex joins the terminal that reaches it first.
fn grow_from(g: &ColouredGraph, terminals: &[usize]) -> Result<Partition, SolveError> {
    let mut owner = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::new();
    for (i, &t) in terminals.iter().enumerate() {
        owner[t] = i;
        queue.push_back(t);
    }
    while let Some(v) = queue.pop_front() {
        for &u in g.neighbours(v) {
            if owner[u] == usize::MAX {
                owner[u] = owner[v];
                queue.push_back(u);
            }
        }
    }
    Ok(Partition::from_labels(&owner))
}
