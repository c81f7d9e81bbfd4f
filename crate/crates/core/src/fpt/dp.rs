//! Dynamic programming over a nice tree decomposition, parameterized by
//! treewidth plus number of colours.
//!
//! A key `(P, ρ)` is a partition `P` of the current bag and, for every block,
//! the set of colours already used by forgotten vertices of the same part.

use indexmap::IndexMap;

use crate::decomposition::{NiceTreeDecomposition, NodeKind};
use crate::error::SolveError;
use crate::graph::{ColouredGraph, EdgeSet, Partition, Problem, SolveResult, SolverTag};
use crate::util::UnionFind;

/// Key of a DP table: block label per bag position (first-occurrence order)
/// and one colour mask per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DpKey {
    pub labels: Vec<u8>,
    pub rho: Vec<u64>,
}

impl DpKey {
    fn empty() -> Self {
        DpKey { labels: Vec::new(), rho: Vec::new() }
    }

    /// Builds the canonical key for `bag` from blocks given as vertex lists.
    fn from_blocks(bag: &[usize], blocks: &[(Vec<usize>, u64)]) -> Self {
        let mut order: Vec<usize> = Vec::with_capacity(blocks.len());
        let mut labels = Vec::with_capacity(bag.len());
        for v in bag {
            let b = blocks.iter().position(|(vs, _)| vs.contains(v)).expect("blocks cover the bag");
            let l = match order.iter().position(|&x| x == b) {
                Some(l) => l,
                None => {
                    order.push(b);
                    order.len() - 1
                }
            };
            labels.push(l as u8);
        }
        let rho = order.iter().map(|&b| blocks[b].1).collect();
        DpKey { labels, rho }
    }

    fn blocks(&self, bag: &[usize]) -> Vec<(Vec<usize>, u64)> {
        let mut out: Vec<(Vec<usize>, u64)> = self.rho.iter().map(|&r| (Vec::new(), r)).collect();
        for (i, &l) in self.labels.iter().enumerate() {
            out[l as usize].0.push(bag[i]);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Back {
    Leaf,
    One(usize),
    Two(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DpEntry {
    pub value: usize,
    pub back: Back,
}

pub type DpTable = IndexMap<DpKey, DpEntry>;

/// All tables of one run, indexed like the decomposition's nodes.
#[derive(Clone, Debug)]
pub struct DpTables {
    pub problem: Problem,
    pub tables: Vec<DpTable>,
    root: usize,
}

impl DpTables {
    pub fn root_table(&self) -> &DpTable {
        &self.tables[self.root]
    }

    pub fn total_keys(&self) -> u64 {
        self.tables.iter().map(|t| t.len() as u64).sum()
    }
}

/// Sets `table[key]` to `value` unless it already holds something no larger.
fn relax(table: &mut DpTable, key: DpKey, value: usize, back: Back) {
    match table.get_mut(&key) {
        Some(e) if e.value <= value => {}
        Some(e) => *e = DpEntry { value, back },
        None => {
            table.insert(key, DpEntry { value, back });
        }
    }
}

fn colour_mask(g: &ColouredGraph, vs: &[usize]) -> Option<u64> {
    let mut m = 0u64;
    for &v in vs {
        let b = 1u64 << g.colour(v);
        if m & b != 0 {
            return None;
        }
        m |= b;
    }
    Some(m)
}

/// Fills every table bottom-up.
pub fn run_dp(g: &ColouredGraph, ntd: &NiceTreeDecomposition, problem: Problem) -> Result<DpTables, SolveError> {
    if g.num_colours() > 64 {
        return Err(SolveError::Limit(format!("{} colours; the table keys hold at most 64", g.num_colours())));
    }
    ntd.check(g)?;
    let nodes = ntd.nodes();
    let mut tables: Vec<DpTable> = Vec::with_capacity(nodes.len());
    for node in nodes {
        let mut t = DpTable::new();
        match node.kind {
            NodeKind::Leaf => relax(&mut t, DpKey::empty(), 0, Back::Leaf),
            NodeKind::Introduce(v) => {
                let child = node.children[0];
                let cbag = &nodes[child].bag;
                for (idx, (key, e)) in tables[child].iter().enumerate() {
                    let blocks = key.blocks(cbag);
                    match problem {
                        Problem::Partition => introduce_partition(g, &node.bag, v, &blocks, e.value, idx, &mut t),
                        Problem::Components => introduce_components(g, &node.bag, v, &blocks, e.value, idx, &mut t),
                    }
                }
            }
            NodeKind::Forget(v) => {
                let child = node.children[0];
                let cbag = &nodes[child].bag;
                let cv = 1u64 << g.colour(v);
                for (idx, (key, e)) in tables[child].iter().enumerate() {
                    let mut blocks = key.blocks(cbag);
                    let b = blocks.iter().position(|(vs, _)| vs.contains(&v)).expect("v is in the child bag");
                    if blocks[b].0.len() == 1 {
                        blocks.remove(b);
                    } else {
                        blocks[b].0.retain(|&x| x != v);
                        blocks[b].1 |= cv;
                    }
                    relax(&mut t, DpKey::from_blocks(&node.bag, &blocks), e.value, Back::One(idx));
                }
            }
            NodeKind::Join => {
                let (j, k) = (node.children[0], node.children[1]);
                match problem {
                    Problem::Partition => join_partition(g, &node.bag, &tables[j], &tables[k], &mut t),
                    Problem::Components => join_components(g, &node.bag, &tables[j], &tables[k], &mut t),
                }
            }
        }
        tables.push(t);
    }
    Ok(DpTables { problem, tables, root: ntd.root() })
}

fn introduce_partition(
    g: &ColouredGraph,
    bag: &[usize],
    v: usize,
    blocks: &[(Vec<usize>, u64)],
    value: usize,
    idx: usize,
    t: &mut DpTable,
) {
    let adjacent: Vec<usize> =
        (0..blocks.len()).filter(|&b| blocks[b].0.iter().any(|&u| g.has_edge(u, v))).collect();
    for r in 0u32..1 << adjacent.len() {
        let chosen: Vec<usize> = (0..adjacent.len()).filter(|&i| r >> i & 1 == 1).map(|i| adjacent[i]).collect();
        let mut yv = vec![v];
        for &b in &chosen {
            yv.extend_from_slice(&blocks[b].0);
        }
        let Some(cy) = colour_mask(g, &yv) else { continue };
        let mut seen = cy;
        let mut disjoint = true;
        for &b in &chosen {
            if seen & blocks[b].1 != 0 {
                disjoint = false;
                break;
            }
            seen |= blocks[b].1;
        }
        if !disjoint {
            continue;
        }
        let rho_new = chosen.iter().fold(0u64, |m, &b| m | blocks[b].1);
        let mut next: Vec<(Vec<usize>, u64)> =
            (0..blocks.len()).filter(|b| !chosen.contains(b)).map(|b| blocks[b].clone()).collect();
        next.push((yv, rho_new));
        relax(t, DpKey::from_blocks(bag, &next), value + 1 - chosen.len(), Back::One(idx));
    }
}

fn introduce_components(
    g: &ColouredGraph,
    bag: &[usize],
    v: usize,
    blocks: &[(Vec<usize>, u64)],
    value: usize,
    idx: usize,
    t: &mut DpTable,
) {
    let cv = 1u64 << g.colour(v);
    let nbrs_in_bag = bag.iter().filter(|&&u| g.has_edge(u, v)).count();
    for b in 0..blocks.len() {
        let (vs, rho) = &blocks[b];
        if rho & cv != 0 || vs.iter().any(|&u| g.colour(u) == g.colour(v)) {
            continue;
        }
        let inside = vs.iter().filter(|&&u| g.has_edge(u, v)).count();
        let mut next = blocks.to_vec();
        next[b].0.push(v);
        relax(t, DpKey::from_blocks(bag, &next), value + nbrs_in_bag - inside, Back::One(idx));
    }
    let mut next = blocks.to_vec();
    next.push((vec![v], 0));
    relax(t, DpKey::from_blocks(bag, &next), value + nbrs_in_bag, Back::One(idx));
}

fn join_partition(g: &ColouredGraph, bag: &[usize], tj: &DpTable, tk: &DpTable, t: &mut DpTable) {
    let colours: Vec<u64> = bag.iter().map(|&v| 1u64 << g.colour(v)).collect();
    for (ij, (p, ej)) in tj.iter().enumerate() {
        for (ik, (q, ek)) in tk.iter().enumerate() {
            // Finest common coarsening, over bag positions.
            let mut uf = UnionFind::new(bag.len());
            for labels in [&p.labels, &q.labels] {
                let mut first = [usize::MAX; 64];
                for (i, &l) in labels.iter().enumerate() {
                    match first[l as usize] {
                        usize::MAX => first[l as usize] = i,
                        f => {
                            uf.union(f, i);
                        }
                    }
                }
            }
            let merged = uf.labels();
            let blocks = merged.iter().copied().max().map_or(0, |m| m + 1);
            let mut cy = vec![0u64; blocks];
            let mut ok = true;
            for (i, &y) in merged.iter().enumerate() {
                if cy[y] & colours[i] != 0 {
                    ok = false;
                    break;
                }
                cy[y] |= colours[i];
            }
            if !ok {
                continue;
            }
            // c(Y) and the ρ-sets of the parts that make up Y must be pairwise disjoint.
            let mut used = cy.clone();
            let mut rho = vec![0u64; blocks];
            'outer: for key in [p, q] {
                let mut done = [false; 64];
                for (i, &l) in key.labels.iter().enumerate() {
                    if done[l as usize] {
                        continue;
                    }
                    done[l as usize] = true;
                    let r = key.rho[l as usize];
                    let y = merged[i];
                    if used[y] & r != 0 {
                        ok = false;
                        break 'outer;
                    }
                    used[y] |= r;
                    rho[y] |= r;
                }
            }
            if !ok {
                continue;
            }
            let key = DpKey { labels: merged.iter().map(|&y| y as u8).collect(), rho };
            let value = ej.value + ek.value + blocks - p.rho.len() - q.rho.len();
            relax(t, key, value, Back::Two(ij, ik));
        }
    }
}

fn join_components(g: &ColouredGraph, bag: &[usize], tj: &DpTable, tk: &DpTable, t: &mut DpTable) {
    for (ij, (p, ej)) in tj.iter().enumerate() {
        let crossing = (0..bag.len())
            .flat_map(|a| (a + 1..bag.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| p.labels[a] != p.labels[b] && g.has_edge(bag[a], bag[b]))
            .count();
        for (ik, (q, ek)) in tk.iter().enumerate() {
            if p.labels != q.labels || p.rho.iter().zip(&q.rho).any(|(a, b)| a & b != 0) {
                continue;
            }
            let rho = p.rho.iter().zip(&q.rho).map(|(a, b)| a | b).collect();
            let key = DpKey { labels: p.labels.clone(), rho };
            relax(t, key, ej.value + ek.value - crossing, Back::Two(ij, ik));
        }
    }
}

/// Vertex classes of the solution traced back from the root key.
fn trace(g: &ColouredGraph, ntd: &NiceTreeDecomposition, dp: &DpTables) -> UnionFind {
    let nodes = ntd.nodes();
    let mut uf = UnionFind::new(g.n());
    let root_idx = dp.tables[dp.root].get_index_of(&DpKey::empty()).expect("root key present");
    let mut stack = vec![(dp.root, root_idx)];
    while let Some((node, idx)) = stack.pop() {
        let (key, entry) = dp.tables[node].get_index(idx).expect("back-pointer in range");
        let bag = &nodes[node].bag;
        for (vs, _) in key.blocks(bag) {
            for w in vs.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        match entry.back {
            Back::Leaf => {}
            Back::One(c) => stack.push((nodes[node].children[0], c)),
            Back::Two(a, b) => {
                stack.push((nodes[node].children[0], a));
                stack.push((nodes[node].children[1], b));
            }
        }
    }
    uf
}

/// Minimum colourful partition size, with a witness.
pub fn dp_partition(g: &ColouredGraph, ntd: &NiceTreeDecomposition) -> Result<SolveResult, SolveError> {
    let dp = run_dp(g, ntd, Problem::Partition)?;
    let value = dp.root_table().get(&DpKey::empty()).expect("the singleton partition is always feasible").value;
    let p = Partition::from_labels(&trace(g, ntd, &dp).labels());
    debug_assert_eq!(p.len(), value);
    Ok(SolveResult::partition(value, p, SolverTag::TreeDecompositionDp, dp.total_keys()))
}

/// Minimum number of edge deletions leaving a colourful graph, with a witness.
pub fn dp_components(g: &ColouredGraph, ntd: &NiceTreeDecomposition) -> Result<SolveResult, SolveError> {
    let dp = run_dp(g, ntd, Problem::Components)?;
    let value = dp.root_table().get(&DpKey::empty()).expect("deleting every edge is always feasible").value;
    let mut uf = trace(g, ntd, &dp);
    let f = EdgeSet::new(g.edges().iter().copied().filter(|&(u, v)| uf.find(u) != uf.find(v)));
    debug_assert_eq!(f.len(), value);
    Ok(SolveResult::deletions(f, SolverTag::TreeDecompositionDp, dp.total_keys()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{exact_tree_decomposition, to_nice};

    fn nice(g: &ColouredGraph) -> NiceTreeDecomposition {
        to_nice(&exact_tree_decomposition(g, 4).unwrap().unwrap()).unwrap()
    }

    fn example1(k: usize) -> ColouredGraph {
        let mut colours: Vec<u32> = (1..=k as u32).chain(1..=k as u32).collect();
        colours.extend([k as u32 + 1, k as u32 + 2]);
        let mut edges = vec![(2 * k, 2 * k + 1)];
        for i in 0..2 * k {
            edges.push((i, 2 * k));
            edges.push((i, 2 * k + 1));
        }
        ColouredGraph::new(&colours, &edges).unwrap()
    }

    #[test]
    fn rainbow_tree_is_one_block() {
        let g = ColouredGraph::new(&[1, 2, 3, 4], &[(0, 1), (1, 2), (1, 3)]).unwrap();
        let r = dp_partition(&g, &nice(&g)).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.validate(&g).unwrap());
        assert_eq!(dp_components(&g, &nice(&g)).unwrap().value, 0);
    }

    #[test]
    fn example_one_values() {
        for k in 2..=4 {
            let g = example1(k);
            let ntd = nice(&g);
            let p = dp_partition(&g, &ntd).unwrap();
            assert_eq!(p.value, 2);
            assert!(p.validate(&g).unwrap());
            let c = dp_components(&g, &ntd).unwrap();
            assert_eq!(c.value, 2 * k);
            assert!(c.validate(&g).unwrap());
        }
    }

    #[test]
    fn root_holds_a_single_key() {
        let g = example1(3);
        let ntd = nice(&g);
        for problem in [Problem::Partition, Problem::Components] {
            let dp = run_dp(&g, &ntd, problem).unwrap();
            assert_eq!(dp.root_table().len(), 1);
        }
    }

    #[test]
    fn empty_graph() {
        let g = ColouredGraph::empty();
        assert_eq!(dp_partition(&g, &nice(&g)).unwrap().value, 0);
        assert_eq!(dp_components(&g, &nice(&g)).unwrap().value, 0);
    }

    #[test]
    fn relax_keeps_minimum() {
        let mut t = DpTable::new();
        relax(&mut t, DpKey::empty(), 5, Back::Leaf);
        relax(&mut t, DpKey::empty(), 7, Back::One(1));
        assert_eq!(t[&DpKey::empty()], DpEntry { value: 5, back: Back::Leaf });
        relax(&mut t, DpKey::empty(), 3, Back::One(2));
        assert_eq!(t[&DpKey::empty()].value, 3);
    }
}
