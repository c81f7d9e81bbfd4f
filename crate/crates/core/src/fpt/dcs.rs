//! Disjoint Connected Subgraphs by branch and bound over the free vertices.

use std::collections::VecDeque;

use thiserror::Error;

use crate::error::SolveError;
use crate::graph::ColouredGraph;

pub const DCS_VERTEX_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DcsError {
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex {0} lies in two groups")]
    Overlap(usize),
    #[error("at least one group is required")]
    NoGroups,
    #[error("{n} vertices exceed the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

impl From<DcsError> for SolveError {
    fn from(e: DcsError) -> Self {
        SolveError::Limit(e.to_string())
    }
}

/// A graph with pairwise disjoint terminal groups `Z_1..Z_r`.
#[derive(Clone, Debug)]
pub struct DcsInstance {
    g: ColouredGraph,
    groups: Vec<Vec<usize>>,
    /// Group of every vertex, `None` for free vertices.
    owner: Vec<Option<usize>>,
}

impl DcsInstance {
    pub fn new(g: ColouredGraph, groups: Vec<Vec<usize>>) -> Result<Self, DcsError> {
        if groups.is_empty() {
            return Err(DcsError::NoGroups);
        }
        let mut owner = vec![None; g.n()];
        for (i, z) in groups.iter().enumerate() {
            for &v in z {
                match owner.get(v) {
                    None => return Err(DcsError::OutOfRange(v)),
                    Some(Some(_)) => return Err(DcsError::Overlap(v)),
                    Some(None) => owner[v] = Some(i),
                }
            }
        }
        Ok(DcsInstance { g, groups, owner })
    }

    pub fn graph(&self) -> &ColouredGraph {
        &self.g
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    /// Whether `assignment` (a group per vertex) extends the terminals and
    /// makes every group connected.
    pub fn is_solution(&self, assignment: &[usize]) -> bool {
        assignment.len() == self.g.n()
            && (0..self.g.n()).all(|v| {
                assignment[v] < self.groups.len()
                    && self.owner[v].map_or(!self.groups[assignment[v]].is_empty(), |o| o == assignment[v])
            })
            && (0..self.groups.len()).all(|i| {
                let members: Vec<usize> = (0..self.g.n()).filter(|&v| assignment[v] == i).collect();
                self.g.is_connected_set(&members)
            })
    }
}

/// An assignment of every vertex to a group such that each group induces a
/// connected subgraph. Free vertices never join a group with no terminals.
pub fn dcs_solve(inst: &DcsInstance) -> Result<Option<Vec<usize>>, DcsError> {
    dcs_search(inst, &mut 0)
}

pub(crate) fn dcs_search(inst: &DcsInstance, explored: &mut u64) -> Result<Option<Vec<usize>>, DcsError> {
    let n = inst.g.n();
    if n > DCS_VERTEX_CAP {
        return Err(DcsError::TooLarge { n, cap: DCS_VERTEX_CAP });
    }
    // Free vertices in breadth-first order from the terminals.
    let mut order = Vec::new();
    let mut seen: Vec<bool> = inst.owner.iter().map(|o| o.is_some()).collect();
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| seen[v]).collect();
    loop {
        while let Some(v) = queue.pop_front() {
            for &u in inst.g.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                    queue.push_back(u);
                }
            }
        }
        match (0..n).find(|&v| !seen[v]) {
            Some(v) => {
                seen[v] = true;
                order.push(v);
                queue.push_back(v);
            }
            None => break,
        }
    }
    let live: Vec<usize> = (0..inst.groups.len()).filter(|&i| !inst.groups[i].is_empty()).collect();
    let mut assignment: Vec<Option<usize>> = inst.owner.clone();
    let found = branch(inst, &order, &live, 0, &mut assignment, explored);
    Ok(found.then(|| assignment.into_iter().map(|a| a.expect("all assigned")).collect()))
}

fn branch(
    inst: &DcsInstance,
    order: &[usize],
    live: &[usize],
    i: usize,
    assignment: &mut Vec<Option<usize>>,
    explored: &mut u64,
) -> bool {
    *explored += 1;
    if !live.iter().all(|&grp| may_connect(inst, assignment, grp)) {
        return false;
    }
    let Some(&v) = order.get(i) else { return true };
    for &grp in live {
        assignment[v] = Some(grp);
        if branch(inst, order, live, i + 1, assignment, explored) {
            return true;
        }
    }
    assignment[v] = None;
    false
}

/// Whether the terminals of `grp` lie in one component of the group's
/// vertices plus the unassigned ones.
fn may_connect(inst: &DcsInstance, assignment: &[Option<usize>], grp: usize) -> bool {
    let z = &inst.groups[grp];
    let ok = |v: usize| assignment[v].is_none_or(|a| a == grp);
    let mut seen = vec![false; inst.g.n()];
    seen[z[0]] = true;
    let mut stack = vec![z[0]];
    while let Some(v) = stack.pop() {
        for &u in inst.g.neighbours(v) {
            if !seen[u] && ok(u) {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    // Assigned members must be reached as well as terminals.
    (0..inst.g.n()).all(|v| assignment[v] != Some(grp) || seen[v])
}

/// Tries all `r^free` assignments; for cross-checking at small sizes.
pub fn dcs_brute(inst: &DcsInstance) -> Option<Vec<usize>> {
    let n = inst.g.n();
    let r = inst.groups.len();
    let free: Vec<usize> = (0..n).filter(|&v| inst.owner[v].is_none()).collect();
    assert!(free.len() <= 12, "too many free vertices for exhaustive search");
    let mut digits = vec![0usize; free.len()];
    loop {
        let mut a: Vec<usize> = inst.owner.iter().map(|o| o.unwrap_or(0)).collect();
        for (j, &v) in free.iter().enumerate() {
            a[v] = digits[j];
        }
        if inst.is_solution(&a) {
            return Some(a);
        }
        let mut j = 0;
        loop {
            if j == digits.len() {
                return None;
            }
            digits[j] += 1;
            if digits[j] < r {
                break;
            }
            digits[j] = 0;
            j += 1;
        }
    }
}
