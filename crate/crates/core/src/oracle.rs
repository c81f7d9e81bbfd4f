//! Exhaustive ground-truth solvers. Slow on purpose, with hard size caps.

use thiserror::Error;

use crate::gadgets::cnf::Cnf;
use crate::graph::{
    colour_multiplicity, crossing_edges, ColouredGraph, EdgeSet, Partition, SolveResult, SolverTag,
};
use crate::poly::twosat::TwoSatFormula;
use crate::util::UnionFind;

/// Default vertex cap for partition enumeration.
pub const PARTITION_CAP: usize = 12;
/// Default edge cap for deletion-subset enumeration.
pub const DELETION_EDGE_CAP: usize = 20;
/// Vertex cap for the vertex-cover oracle.
pub const VERTEX_COVER_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what} = {size} exceeds the oracle cap of {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
}

fn too_large(what: &'static str, size: usize, cap: usize) -> OracleError {
    OracleError::TooLarge { what, size, cap }
}

pub fn brute_min_partition(g: &ColouredGraph) -> Result<SolveResult, OracleError> {
    brute_min_partition_capped(g, PARTITION_CAP)
}

/// Minimum colourful partition by restricted-growth enumeration.
pub fn brute_min_partition_capped(g: &ColouredGraph, cap: usize) -> Result<SolveResult, OracleError> {
    let n = g.n();
    if n > cap.min(64) {
        return Err(too_large("n", n, cap.min(64)));
    }
    let lower = colour_multiplicity(g).max(g.components().len());
    let mut s = PartitionSearch {
        g,
        labels: vec![0; n],
        masks: Vec::new(),
        best: n,
        best_labels: (0..n).collect(),
        lower,
        explored: 0,
    };
    if n > 0 && lower < n {
        s.rec(0);
    }
    let p = Partition::from_labels(&s.best_labels);
    Ok(SolveResult::partition(p.len(), p, SolverTag::Oracle, s.explored))
}

struct PartitionSearch<'a> {
    g: &'a ColouredGraph,
    labels: Vec<usize>,
    masks: Vec<u64>,
    best: usize,
    best_labels: Vec<usize>,
    lower: usize,
    explored: u64,
}

impl PartitionSearch<'_> {
    fn done(&self) -> bool {
        self.best <= self.lower
    }

    fn rec(&mut self, v: usize) {
        self.explored += 1;
        let blocks = self.masks.len();
        if v == self.g.n() {
            if blocks < self.best && self.blocks_connected() {
                self.best = blocks;
                self.best_labels = self.labels.clone();
            }
            return;
        }
        let bit = 1u64 << self.g.colour(v);
        for b in 0..blocks {
            if self.masks[b] & bit == 0 {
                self.labels[v] = b;
                self.masks[b] |= bit;
                self.rec(v + 1);
                self.masks[b] &= !bit;
                if self.done() {
                    return;
                }
            }
        }
        if blocks + 1 < self.best {
            self.labels[v] = blocks;
            self.masks.push(bit);
            self.rec(v + 1);
            self.masks.pop();
        }
    }

    fn blocks_connected(&self) -> bool {
        Partition::from_labels(&self.labels).blocks().iter().all(|b| self.g.is_connected_set(b))
    }
}

/// Minimum deletion set: subset enumeration when `m` is small, otherwise
/// the minimum-crossing colourful set partition.
pub fn brute_min_deletions(g: &ColouredGraph) -> Result<SolveResult, OracleError> {
    if g.m() <= DELETION_EDGE_CAP {
        brute_min_deletions_by_subsets(g, DELETION_EDGE_CAP)
    } else {
        brute_min_deletions_by_partitions(g, PARTITION_CAP)
    }
}

/// Tries every edge subset by increasing size; returns the first that works.
pub fn brute_min_deletions_by_subsets(g: &ColouredGraph, edge_cap: usize) -> Result<SolveResult, OracleError> {
    let m = g.m();
    if m > edge_cap {
        return Err(too_large("m", m, edge_cap));
    }
    let mut explored = 0u64;
    for size in 0..=m {
        let mut chosen = Vec::with_capacity(size);
        if let Some(f) = choose_edges(g, 0, size, &mut chosen, &mut explored) {
            return Ok(SolveResult::deletions(f, SolverTag::Oracle, explored));
        }
    }
    unreachable!("deleting every edge leaves a colourful graph")
}

fn choose_edges(
    g: &ColouredGraph,
    from: usize,
    left: usize,
    chosen: &mut Vec<usize>,
    explored: &mut u64,
) -> Option<EdgeSet> {
    if left == 0 {
        *explored += 1;
        return colourful_without(g, chosen).then(|| EdgeSet::new(chosen.iter().map(|&i| g.edges()[i])));
    }
    for i in from..=g.m() - left {
        chosen.push(i);
        if let Some(f) = choose_edges(g, i + 1, left - 1, chosen, explored) {
            return Some(f);
        }
        chosen.pop();
    }
    None
}

/// Whether `g` minus the edges with indices in `deleted` (sorted) is colourful.
fn colourful_without(g: &ColouredGraph, deleted: &[usize]) -> bool {
    let mut uf = UnionFind::new(g.n());
    let mut d = deleted.iter().peekable();
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if d.peek() == Some(&&i) {
            d.next();
            continue;
        }
        uf.union(u, v);
    }
    let mut pairs: Vec<(usize, usize)> = (0..g.n()).map(|v| (uf.find(v), g.colour(v))).collect();
    pairs.sort_unstable();
    pairs.windows(2).all(|w| w[0] != w[1])
}

/// Minimum number of crossing edges over colourful set partitions (blocks need not be connected).
pub fn brute_min_deletions_by_partitions(g: &ColouredGraph, cap: usize) -> Result<SolveResult, OracleError> {
    let n = g.n();
    if n > cap.min(64) {
        return Err(too_large("n", n, cap.min(64)));
    }
    let mut s = CrossingSearch { g, labels: vec![0; n], masks: Vec::new(), best: g.m() + 1, best_labels: (0..n).collect(), explored: 0 };
    s.rec(0, 0);
    let p = Partition::from_labels(&s.best_labels);
    Ok(SolveResult::deletions(crossing_edges(g, &p), SolverTag::Oracle, s.explored))
}

struct CrossingSearch<'a> {
    g: &'a ColouredGraph,
    labels: Vec<usize>,
    masks: Vec<u64>,
    best: usize,
    best_labels: Vec<usize>,
    explored: u64,
}

impl CrossingSearch<'_> {
    fn rec(&mut self, v: usize, cost: usize) {
        self.explored += 1;
        if cost >= self.best {
            return;
        }
        if v == self.g.n() {
            self.best = cost;
            self.best_labels = self.labels.clone();
            return;
        }
        let bit = 1u64 << self.g.colour(v);
        let earlier: Vec<usize> = self.g.neighbours(v).iter().copied().filter(|&u| u < v).collect();
        let blocks = self.masks.len();
        for b in 0..=blocks {
            if b < blocks && self.masks[b] & bit != 0 {
                continue;
            }
            let added = earlier.iter().filter(|&&u| self.labels[u] != b).count();
            self.labels[v] = b;
            if b == blocks {
                self.masks.push(bit);
            } else {
                self.masks[b] |= bit;
            }
            self.rec(v + 1, cost + added);
            if b == blocks {
                self.masks.pop();
            } else {
                self.masks[b] &= !bit;
            }
            if self.best == 0 {
                return;
            }
        }
    }
}

/// Size of a minimum vertex cover (colours ignored).
pub fn brute_vertex_cover(g: &ColouredGraph) -> Result<usize, OracleError> {
    let n = g.n();
    if n > VERTEX_COVER_CAP {
        return Err(too_large("n", n, VERTEX_COVER_CAP));
    }
    let best = (0u32..1 << n)
        .filter(|&s| g.edges().iter().all(|&(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min();
    Ok(best.unwrap_or(0))
}

/// Satisfying assignment by enumeration. Panics above 20 variables.
pub fn brute_sat(f: &TwoSatFormula) -> Option<Vec<bool>> {
    enumerate_assignments(f.num_vars(), |a| f.is_satisfied_by(a))
}

pub fn brute_cnf_sat(f: &Cnf) -> Option<Vec<bool>> {
    enumerate_assignments(f.num_vars, |a| f.is_satisfied_by(a))
}

pub fn brute_nae_sat(f: &Cnf) -> Option<Vec<bool>> {
    enumerate_assignments(f.num_vars, |a| f.is_nae_satisfied_by(a))
}

fn enumerate_assignments(n: usize, mut ok: impl FnMut(&[bool]) -> bool) -> Option<Vec<bool>> {
    assert!(n <= 20, "assignment enumeration is capped at 20 variables, got {n}");
    let mut a = vec![false; n];
    for bits in 0u32..1 << n {
        for (i, x) in a.iter_mut().enumerate() {
            *x = bits >> i & 1 == 1;
        }
        if ok(&a) {
            return Some(a);
        }
    }
    None
}

/// Maximum bipartite matching size by exhaustive search over left vertices.
pub fn brute_max_matching(left: usize, right: usize, edges: &[(usize, usize)]) -> usize {
    fn rec(l: usize, adj: &[Vec<usize>], used: &mut [bool]) -> usize {
        if l == adj.len() {
            return 0;
        }
        let mut best = rec(l + 1, adj, used);
        for &r in &adj[l] {
            if !used[r] {
                used[r] = true;
                best = best.max(1 + rec(l + 1, adj, used));
                used[r] = false;
            }
        }
        best
    }
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in edges {
        adj[l].push(r);
    }
    rec(0, &adj, &mut vec![false; right])
}

/// Fewest edges of `tree` whose removal separates every pair, by subset enumeration.
pub fn brute_min_multicut(n: usize, tree: &[(usize, usize)], pairs: &[(usize, usize)]) -> Result<usize, OracleError> {
    if tree.len() > DELETION_EDGE_CAP {
        return Err(too_large("tree edges", tree.len(), DELETION_EDGE_CAP));
    }
    let m = tree.len();
    let mut best = usize::MAX;
    for mask in 0u32..1 << m {
        let size = mask.count_ones() as usize;
        if size >= best {
            continue;
        }
        let mut uf = UnionFind::new(n);
        for (i, &(u, v)) in tree.iter().enumerate() {
            if mask >> i & 1 == 0 {
                uf.union(u, v);
            }
        }
        if pairs.iter().all(|&(a, b)| uf.find(a) != uf.find(b)) {
            best = size;
        }
    }
    Ok(best)
}

/// Decides whether a colourful partition with at most `k` blocks exists.
///
/// Depth-first search with colour propagation and a reachability check:
/// the vertices already placed in a block must stay mutually reachable
/// through that block and unplaced vertices. Meant for reduction outputs
/// too large for [`brute_min_partition`] but with small `k`.
pub fn search_partition_at_most(g: &ColouredGraph, k: usize, budget: u64) -> Result<Option<Partition>, OracleError> {
    let n = g.n();
    if n == 0 {
        return Ok(Some(Partition::singletons(0)));
    }
    if k == 0 || colour_multiplicity(g) > k || g.components().len() > k {
        return Ok(None);
    }
    let mut s = DecisionSearch { g, k, block: vec![None; n], nodes: 0, budget };
    // Symmetry: the first vertex goes to block 0.
    let found = s.assign_and_recurse(vec![(0, 0)])?;
    Ok(found.map(|labels| Partition::from_labels(&labels)))
}

struct DecisionSearch<'a> {
    g: &'a ColouredGraph,
    k: usize,
    block: Vec<Option<usize>>,
    nodes: u64,
    budget: u64,
}

impl DecisionSearch<'_> {
    fn options(&self, v: usize) -> Vec<usize> {
        let mut used = vec![false; self.k];
        let cv = self.g.colour(v);
        for (u, b) in self.block.iter().enumerate() {
            if let Some(b) = *b {
                if self.g.colour(u) == cv {
                    used[b] = true;
                }
            }
        }
        (0..self.k).filter(|&b| !used[b]).collect()
    }

    /// Applies `moves`, propagates forced placements, checks reachability, then branches.
    fn assign_and_recurse(&mut self, moves: Vec<(usize, usize)>) -> Result<Option<Vec<usize>>, OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::BudgetExhausted(self.budget));
        }
        let mut trail = Vec::new();
        let result = self.propagate_and_branch(moves, &mut trail);
        for v in trail {
            self.block[v] = None;
        }
        result
    }

    fn propagate_and_branch(
        &mut self,
        moves: Vec<(usize, usize)>,
        trail: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>, OracleError> {
        for (v, b) in moves {
            self.block[v] = Some(b);
            trail.push(v);
        }
        // Unit propagation on colour conflicts.
        loop {
            let mut forced = None;
            let mut unplaced = false;
            for v in 0..self.g.n() {
                if self.block[v].is_some() {
                    continue;
                }
                unplaced = true;
                let opts = self.options(v);
                match opts.len() {
                    0 => return Ok(None),
                    1 => {
                        forced = Some((v, opts[0]));
                        break;
                    }
                    _ => {}
                }
            }
            if let Some((v, b)) = forced {
                self.block[v] = Some(b);
                trail.push(v);
                continue;
            }
            if !self.reachable() {
                return Ok(None);
            }
            if !unplaced {
                return Ok(Some(self.block.iter().map(|b| b.expect("all placed")).collect()));
            }
            let v = self.branch_vertex();
            for b in self.options(v) {
                if let Some(found) = self.assign_and_recurse(vec![(v, b)])? {
                    return Ok(Some(found));
                }
            }
            return Ok(None);
        }
    }

    /// Unplaced vertex with fewest options, preferring ones next to placed vertices.
    fn branch_vertex(&self) -> usize {
        (0..self.g.n())
            .filter(|&v| self.block[v].is_none())
            .min_by_key(|&v| {
                let touching = self.g.neighbours(v).iter().any(|&u| self.block[u].is_some());
                (self.options(v).len(), !touching, v)
            })
            .expect("some vertex is unplaced")
    }

    fn reachable(&self) -> bool {
        let n = self.g.n();
        for b in 0..self.k {
            let members: Vec<usize> = (0..n).filter(|&v| self.block[v] == Some(b)).collect();
            let Some(&start) = members.first() else { continue };
            let mut seen = vec![false; n];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &w in self.g.neighbours(u) {
                    if !seen[w] && (self.block[w].is_none() || self.block[w] == Some(b)) {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if members.iter().any(|&v| !seen[v]) {
                return false;
            }
        }
        true
    }
}
