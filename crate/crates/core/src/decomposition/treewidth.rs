//! Exact treewidth by elimination orderings.
//!
//! Widths up to 2 are recognized greedily (any vertex of degree at most 2 can
//! be eliminated safely, since doing so takes a minor). Larger widths use a
//! memoized depth-first search over elimination orderings per component,
//! seeded with the min-degree heuristic.

use std::collections::{BTreeSet, HashSet};

use super::td::{TdError, TreeDecomposition};
use crate::graph::ColouredGraph;
use crate::util::bits;

/// Component size cap for the exhaustive search (widths ≥ 3).
pub const TREEWIDTH_CAP: usize = 30;

/// A decomposition of minimum width if that width is at most `max_width`, else `None`.
pub fn exact_tree_decomposition(g: &ColouredGraph, max_width: usize) -> Result<Option<TreeDecomposition>, TdError> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        match component_order(g, &comp, max_width)? {
            Some(local) => order.extend(local),
            None => return Ok(None),
        }
    }
    Ok(Some(decomposition_from_order(g, &order)))
}

/// Treewidth if it is at most `max_width`.
pub fn treewidth(g: &ColouredGraph, max_width: usize) -> Result<Option<usize>, TdError> {
    Ok(exact_tree_decomposition(g, max_width)?.map(|td| td.width()))
}

/// Elimination order of one component with minimum width, in original ids.
fn component_order(g: &ColouredGraph, comp: &[usize], max_width: usize) -> Result<Option<Vec<usize>>, TdError> {
    let (h, back) = g.induced(comp);
    for k in 0..=max_width.min(2) {
        if let Some(order) = greedy_order(&h, Some(k)) {
            return Ok(Some(order.into_iter().map(|v| back[v]).collect()));
        }
    }
    if max_width < 3 {
        return Ok(None);
    }
    let n = h.n();
    if n > TREEWIDTH_CAP {
        return Err(TdError::TooLarge { what: "component size", size: n, cap: TREEWIDTH_CAP });
    }
    let seed = greedy_order(&h, None).expect("unbounded greedy always finishes");
    let seed_width = order_width(&h, &seed);
    let adj: Vec<u64> =
        (0..n).map(|v| h.neighbours(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for k in 3..=max_width {
        if seed_width <= k {
            return Ok(Some(seed.into_iter().map(|v| back[v]).collect()));
        }
        let mut order = Vec::with_capacity(n);
        if decide(&adj, all, k, &mut HashSet::new(), &mut order) {
            return Ok(Some(order.into_iter().map(|v| back[v]).collect()));
        }
    }
    Ok(None)
}

/// Repeatedly eliminates a minimum-degree vertex; with `Some(k)`, fails once every degree exceeds `k`.
fn greedy_order(g: &ColouredGraph, threshold: Option<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbours(v).iter().copied().collect()).collect();
    let mut alive: BTreeSet<(usize, usize)> = (0..n).map(|v| (adj[v].len(), v)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(&(d, v)) = alive.iter().next() {
        if threshold.is_some_and(|k| d > k) {
            return None;
        }
        alive.remove(&(d, v));
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &u in &nb {
            alive.remove(&(adj[u].len(), u));
            adj[u].remove(&v);
            for &w in &nb {
                if w != u {
                    adj[u].insert(w);
                }
            }
            alive.insert((adj[u].len(), u));
        }
        order.push(v);
    }
    Some(order)
}

/// Width of the decomposition induced by an elimination order.
fn order_width(g: &ColouredGraph, order: &[usize]) -> usize {
    higher_neighbourhoods(g, order).iter().map(BTreeSet::len).max().unwrap_or(0)
}

/// For each vertex, its neighbours in the fill graph that are eliminated later.
fn higher_neighbourhoods(g: &ColouredGraph, order: &[usize]) -> Vec<BTreeSet<usize>> {
    let n = g.n();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| g.neighbours(v).iter().copied().collect()).collect();
    let mut out = vec![BTreeSet::new(); n];
    for &v in order {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &u in &nb {
            adj[u].remove(&v);
            for &w in &nb {
                if w != u {
                    adj[u].insert(w);
                }
            }
        }
        out[v] = std::mem::take(&mut adj[v]);
    }
    out
}

fn eliminate(adj: &[u64], rem: u64, v: usize) -> Vec<u64> {
    let nb = adj[v] & rem & !(1 << v);
    let mut next = adj.to_vec();
    for u in bits(nb) {
        next[u] = (next[u] | nb) & !(1 << u) & !(1 << v);
    }
    next
}

/// Whether the elimination graph on `rem` has an ordering of width ≤ k; appends it to `order`.
fn decide(adj: &[u64], rem: u64, k: usize, failed: &mut HashSet<u64>, order: &mut Vec<usize>) -> bool {
    if rem.count_ones() as usize <= k + 1 {
        order.extend(bits(rem));
        return true;
    }
    if failed.contains(&rem) {
        return false;
    }
    let deg = |v: usize| (adj[v] & rem).count_ones() as usize;
    // A simplicial vertex can always be eliminated first.
    for v in bits(rem) {
        let nb = adj[v] & rem;
        if bits(nb).all(|u| (adj[u] | 1 << u) & nb == nb) {
            if deg(v) > k {
                failed.insert(rem);
                return false;
            }
            order.push(v);
            if decide(&eliminate(adj, rem, v), rem & !(1 << v), k, failed, order) {
                return true;
            }
            order.pop();
            failed.insert(rem);
            return false;
        }
    }
    let mut cands: Vec<(usize, usize)> = bits(rem).map(|v| (deg(v), v)).filter(|&(d, _)| d <= k).collect();
    cands.sort_unstable();
    for (_, v) in cands {
        order.push(v);
        if decide(&eliminate(adj, rem, v), rem & !(1 << v), k, failed, order) {
            return true;
        }
        order.pop();
    }
    failed.insert(rem);
    false
}

/// Decomposition with one bag `{v} ∪ N⁺(v)` per vertex, simplified afterwards.
///
/// `order` must list every vertex once. Component roots are chained together.
pub fn decomposition_from_order(g: &ColouredGraph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![vec![]], vec![]);
    }
    let higher = higher_neighbourhoods(g, order);
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut bag: Vec<usize> = higher[v].iter().copied().collect();
        bag.push(v);
        bags.push(bag);
        match higher[v].iter().map(|&u| pos[u]).min() {
            Some(p) => edges.push((i, p)),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, edges).simplified()
}
