//! Minimum colourful partition parameterized by the size of a vertex cover.
//!
//! With a cover `S` and the independent rest `T`, two reduction rules bound
//! the instance; every partition of `S` into colourful blocks is then
//! extended by branching over the kernel's `T` vertices.

use std::collections::{BTreeMap, HashMap};

use crate::error::SolveError;
use crate::graph::{ColouredGraph, EdgeSet, Partition, SolveResult, SolverTag};
use crate::poly::hopcroft_karp;

pub const DEFAULT_MAX_KERNEL: usize = 40;
const MAX_COVER: usize = 16;

/// What the reduction rules did on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcKernelReport {
    pub cover: Vec<usize>,
    /// Vertices removed by the first rule; they end up as singletons.
    pub rule_one_deleted: Vec<usize>,
    /// Dense colours removed by the second rule, in deletion order.
    pub rule_two_colours: Vec<usize>,
    pub kernel_vertices: usize,
    pub bound: u128,
}

impl VcKernelReport {
    pub fn within_bound(&self) -> bool {
        self.kernel_vertices as u128 <= self.bound
    }
}

/// `s + s²·2^s + (s−1)(s+1)^(2^s)·s·2^s`, saturating.
pub fn kernel_bound(s: usize) -> u128 {
    let s128 = s as u128;
    let two_s = 1u128.checked_shl(s as u32).unwrap_or(u128::MAX);
    let pow = u32::try_from(two_s).ok().and_then(|e| (s128 + 1).checked_pow(e)).unwrap_or(u128::MAX);
    let tail = s128.saturating_sub(1).saturating_mul(pow).saturating_mul(s128).saturating_mul(two_s);
    s128.saturating_add(s128.saturating_mul(s128).saturating_mul(two_s)).saturating_add(tail)
}

/// Endpoints of a maximal matching, minus vertices whose neighbours are all in the cover.
pub fn greedy_vertex_cover(g: &ColouredGraph) -> Vec<usize> {
    let mut in_s = vec![false; g.n()];
    for &(u, v) in g.edges() {
        if !in_s[u] && !in_s[v] {
            in_s[u] = true;
            in_s[v] = true;
        }
    }
    for v in 0..g.n() {
        if in_s[v] && g.neighbours(v).iter().all(|&u| in_s[u]) {
            in_s[v] = false;
        }
    }
    (0..g.n()).filter(|&v| in_s[v]).collect()
}

/// A vertex cover of size at most `k`, by bounded branching on edges.
pub fn vertex_cover_at_most(g: &ColouredGraph, k: usize) -> Option<Vec<usize>> {
    fn go(g: &ColouredGraph, in_s: &mut Vec<bool>, k: usize) -> bool {
        let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !in_s[u] && !in_s[v]) else {
            return true;
        };
        if k == 0 {
            return false;
        }
        for w in [u, v] {
            in_s[w] = true;
            if go(g, in_s, k - 1) {
                return true;
            }
            in_s[w] = false;
        }
        false
    }
    let mut in_s = vec![false; g.n()];
    go(g, &mut in_s, k).then(|| (0..g.n()).filter(|&v| in_s[v]).collect())
}

pub fn solve_partition_vc(g: &ColouredGraph) -> Result<SolveResult, SolveError> {
    solve_partition_vc_report(g, DEFAULT_MAX_KERNEL).map(|(r, _)| r)
}

struct Kernel<'a> {
    g: &'a ColouredGraph,
    cover: Vec<usize>,
    /// Kernel `T` vertices with the cover indices of their neighbours.
    t: Vec<(usize, u64)>,
    /// Vertices of each colour removed by the second rule, latest deletion last.
    removed: Vec<Vec<(usize, u64)>>,
}

pub fn solve_partition_vc_report(
    g: &ColouredGraph,
    max_kernel: usize,
) -> Result<(SolveResult, VcKernelReport), SolveError> {
    let n = g.n();
    // Same-coloured vertices never share a block, so their edges are irrelevant.
    let proper = g.without_edges(&EdgeSet::new(g.edges().iter().copied().filter(|&(u, v)| g.colour(u) == g.colour(v))))?;
    let g = &proper;
    let cover = greedy_vertex_cover(g);
    let s = cover.len();
    if s > MAX_COVER {
        return Err(SolveError::Limit(format!("vertex cover of size {s} exceeds {MAX_COVER}")));
    }
    let mut index = vec![usize::MAX; n];
    for (i, &v) in cover.iter().enumerate() {
        index[v] = i;
    }
    let nmask = |t: usize| g.neighbours(t).iter().fold(0u64, |m, &u| m | 1 << index[u]);

    // Rule 1: at most s vertices per (colour, neighbourhood in S).
    let mut groups: BTreeMap<(usize, u64), Vec<usize>> = BTreeMap::new();
    for t in (0..n).filter(|&v| index[v] == usize::MAX) {
        groups.entry((g.colour(t), nmask(t))).or_default().push(t);
    }
    let mut rule_one_deleted = Vec::new();
    let mut alive: Vec<(usize, u64)> = Vec::new();
    for (&(_, mask), members) in &groups {
        rule_one_deleted.extend_from_slice(&members[members.len().min(s)..]);
        alive.extend(members[..members.len().min(s)].iter().map(|&t| (t, mask)));
    }
    rule_one_deleted.sort_unstable();
    alive.sort_unstable();

    // Rule 2: colours only on T with equal profiles S' -> |T_i(S')| are interchangeable.
    let mut in_cover = vec![false; g.num_colours()];
    for &v in &cover {
        in_cover[g.colour(v)] = true;
    }
    let mut profile: BTreeMap<usize, BTreeMap<u64, usize>> = BTreeMap::new();
    for &(t, mask) in &alive {
        if !in_cover[g.colour(t)] {
            *profile.entry(g.colour(t)).or_default().entry(mask).or_default() += 1;
        }
    }
    let mut classes: HashMap<Vec<(u64, usize)>, Vec<usize>> = HashMap::new();
    for (colour, p) in profile {
        classes.entry(p.into_iter().collect()).or_default().push(colour);
    }
    let mut rule_two_colours = Vec::new();
    let mut class_list: Vec<Vec<usize>> = classes.into_values().collect();
    class_list.sort();
    for mut class in class_list {
        while s > 0 && class.len() >= s {
            rule_two_colours.push(class.pop().expect("non-empty class"));
        }
    }
    let mut kernel = Kernel { g, cover: cover.clone(), t: Vec::new(), removed: Vec::new() };
    let mut removed_of: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for &(t, mask) in &alive {
        if rule_two_colours.contains(&g.colour(t)) {
            removed_of.entry(g.colour(t)).or_default().push((t, mask));
        } else {
            kernel.t.push((t, mask));
        }
    }
    kernel.removed = rule_two_colours.iter().map(|c| removed_of.remove(c).unwrap_or_default()).collect();

    let report = VcKernelReport {
        cover,
        rule_one_deleted: rule_one_deleted.clone(),
        rule_two_colours,
        kernel_vertices: s + kernel.t.len(),
        bound: kernel_bound(s),
    };
    debug_assert!(report.within_bound());
    if report.kernel_vertices > max_kernel {
        return Err(SolveError::Limit(format!("kernel has {} vertices, cap is {max_kernel}", report.kernel_vertices)));
    }

    let mut best: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
    let mut explored = 0u64;
    let mut q = Vec::with_capacity(s);
    enumerate_cover_partitions(&kernel, &mut q, &mut Vec::new(), &mut |blocks| {
        let floor = blocks.len() + rule_one_deleted.len();
        if floor >= best.len() {
            return;
        }
        if let Some(p) = extend(&kernel, blocks, best.len() - rule_one_deleted.len(), &mut explored) {
            let mut all = p;
            all.extend(rule_one_deleted.iter().map(|&v| vec![v]));
            if all.len() < best.len() {
                best = all;
            }
        }
    });
    let p = Partition::new(best)?;
    Ok((SolveResult::partition(p.len(), p, SolverTag::VertexCoverKernel, explored), report))
}

/// Calls `f` with every partition of the cover into colourful blocks.
fn enumerate_cover_partitions(
    k: &Kernel,
    labels: &mut Vec<usize>,
    blocks: &mut Vec<Vec<usize>>,
    f: &mut dyn FnMut(&[Vec<usize>]),
) {
    let i = labels.len();
    if i == k.cover.len() {
        f(blocks);
        return;
    }
    let v = k.cover[i];
    for b in 0..=blocks.len() {
        if b == blocks.len() {
            blocks.push(vec![v]);
        } else if blocks[b].iter().any(|&u| k.g.colour(u) == k.g.colour(v)) {
            continue;
        } else {
            blocks[b].push(v);
        }
        labels.push(b);
        enumerate_cover_partitions(k, labels, blocks, f);
        labels.pop();
        if blocks[b].len() == 1 {
            blocks.pop();
        } else {
            blocks[b].pop();
        }
    }
}

/// Best extension of the cover partition `q` to the whole graph (minus first-rule
/// deletions), if one with fewer than `limit` parts exists.
fn extend(k: &Kernel, q: &[Vec<usize>], limit: usize, explored: &mut u64) -> Option<Vec<Vec<usize>>> {
    let g = k.g;
    let index_of = |v: usize| k.cover.iter().position(|&x| x == v).expect("cover vertex");
    let qmask: Vec<u64> = q.iter().map(|b| b.iter().fold(0u64, |m, &v| m | 1 << index_of(v))).collect();
    let mut order: Vec<(usize, Vec<usize>)> =
        k.t.iter().map(|&(t, mask)| (t, (0..q.len()).filter(|&b| qmask[b] & mask != 0).collect())).collect();
    order.sort_by_key(|(_, opts)| opts.len());

    let mut search = Search {
        g,
        q,
        order: &order,
        used: q.iter().map(|b| b.iter().map(|&v| g.colour(v)).collect()).collect(),
        assigned: vec![Vec::new(); q.len()],
        best_singles: limit.checked_sub(q.len())?,
        best: None,
        explored: 0,
    };
    search.dfs(0, 0);
    *explored += search.explored;
    let assigned = search.best?;

    let mut blocks: Vec<Vec<usize>> = q.to_vec();
    for (b, ts) in assigned.iter().enumerate() {
        blocks[b].extend_from_slice(ts);
    }
    let mut singles: Vec<Vec<usize>> = order
        .iter()
        .filter(|(t, _)| !assigned.iter().any(|ts| ts.contains(t)))
        .map(|&(t, _)| vec![t])
        .collect();
    // Put second-rule colours back, most recently deleted first.
    let qmask = &qmask;
    for colour in k.removed.iter().rev() {
        let edges: Vec<(usize, usize)> = colour
            .iter()
            .enumerate()
            .flat_map(|(x, &(_, mask))| (0..q.len()).filter(move |&b| qmask[b] & mask != 0).map(move |b| (x, b)))
            .collect();
        let m = hopcroft_karp(colour.len(), q.len(), &edges);
        for (x, &(t, _)) in colour.iter().enumerate() {
            match m.left[x] {
                Some(b) => blocks[b].push(t),
                None => singles.push(vec![t]),
            }
        }
    }
    blocks.extend(singles);
    (blocks.len() < limit).then_some(blocks)
}

struct Search<'a> {
    g: &'a ColouredGraph,
    q: &'a [Vec<usize>],
    order: &'a [(usize, Vec<usize>)],
    used: Vec<Vec<usize>>,
    assigned: Vec<Vec<usize>>,
    /// Exclusive bound on singletons for an improving solution.
    best_singles: usize,
    best: Option<Vec<Vec<usize>>>,
    explored: u64,
}

impl Search<'_> {
    fn dfs(&mut self, i: usize, singles: usize) {
        self.explored += 1;
        if singles >= self.best_singles || !self.may_connect(i) {
            return;
        }
        if i == self.order.len() {
            self.best_singles = singles;
            self.best = Some(self.assigned.clone());
            return;
        }
        let (t, ref opts) = self.order[i];
        let c = self.g.colour(t);
        for &b in opts {
            if self.used[b].contains(&c) {
                continue;
            }
            self.used[b].push(c);
            self.assigned[b].push(t);
            self.dfs(i + 1, singles);
            self.assigned[b].pop();
            self.used[b].pop();
        }
        self.dfs(i + 1, singles + 1);
    }

    /// Whether every cover block can still become connected using its assigned
    /// vertices and the unplaced ones that could join it.
    fn may_connect(&self, i: usize) -> bool {
        (0..self.q.len()).all(|b| {
            if self.q[b].len() == 1 {
                return true;
            }
            let mut pool: Vec<usize> = self.q[b].clone();
            pool.extend_from_slice(&self.assigned[b]);
            pool.extend(
                self.order[i..]
                    .iter()
                    .filter(|(t, opts)| opts.contains(&b) && !self.used[b].contains(&self.g.colour(*t)))
                    .map(|&(t, _)| t),
            );
            connects(self.g, &pool, &self.q[b])
        })
    }
}

/// Whether all of `targets` lie in one component of the subgraph induced by `pool`.
fn connects(g: &ColouredGraph, pool: &[usize], targets: &[usize]) -> bool {
    let mut seen = vec![targets[0]];
    let mut stack = vec![targets[0]];
    while let Some(v) = stack.pop() {
        for &u in g.neighbours(v) {
            if pool.contains(&u) && !seen.contains(&u) {
                seen.push(u);
                stack.push(u);
            }
        }
    }
    targets.iter().all(|t| seen.contains(t))
}
