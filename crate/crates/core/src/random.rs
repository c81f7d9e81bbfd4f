//! Seeded random instance families for tests and benchmarks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::TreeDecomposition;
use crate::gadgets::cnf::Cnf;
use crate::graph::ColouredGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Colours drawn uniformly from `1..=colours`.
pub fn random_colours<R: Rng>(rng: &mut R, n: usize, colours: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(1..=colours.max(1))).collect()
}

fn build(colours: Vec<u32>, edges: BTreeSet<(usize, usize)>) -> ColouredGraph {
    let edges: Vec<_> = edges.into_iter().collect();
    ColouredGraph::new(&colours, &edges).expect("generator produces simple graphs")
}

/// Random spanning tree plus each remaining pair with probability `p`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64, colours: u32) -> ColouredGraph {
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let g = build(random_colours(rng, n, colours), edges);
    relabel(&g, &permutation(rng, n))
}

/// Erdos-Renyi graph.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64, colours: u32) -> ColouredGraph {
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    build(random_colours(rng, n, colours), edges)
}

/// Connected partial `k`-tree together with a decomposition of width ≤ `k`.
///
/// Each new vertex joins a random existing `k`-clique; its edges are kept
/// with probability `keep`, but at least one is always kept.
pub fn random_partial_ktree<R: Rng>(
    rng: &mut R,
    n: usize,
    k: usize,
    keep: f64,
    colours: u32,
) -> (ColouredGraph, TreeDecomposition) {
    let k = k.max(1);
    if n <= k + 1 {
        let mut edges = BTreeSet::new();
        for v in 1..n {
            edges.insert((rng.gen_range(0..v), v));
            for u in 0..v {
                if rng.gen_bool(keep) {
                    edges.insert((u, v));
                }
            }
        }
        return (build(random_colours(rng, n, colours), edges), TreeDecomposition::trivial(n));
    }
    let mut edges = BTreeSet::new();
    let base: Vec<usize> = (0..=k).collect();
    for v in 1..=k {
        edges.insert((rng.gen_range(0..v), v));
        for u in 0..v {
            if rng.gen_bool(keep) {
                edges.insert((u, v));
            }
        }
    }
    let mut bags = vec![base.clone()];
    let mut tree = Vec::new();
    // Cliques available for attachment, with the bag index that contains each.
    let mut cliques: Vec<(Vec<usize>, usize)> = (0..=k).map(|drop| (without(&base, drop), 0)).collect();
    for v in k + 1..n {
        let (clique, host) = cliques[rng.gen_range(0..cliques.len())].clone();
        let forced = clique[rng.gen_range(0..clique.len())];
        for &u in &clique {
            if u == forced || rng.gen_bool(keep) {
                edges.insert((u.min(v), u.max(v)));
            }
        }
        let mut bag = clique.clone();
        bag.push(v);
        bags.push(bag.clone());
        let me = bags.len() - 1;
        tree.push((host, me));
        for drop in 0..bag.len() {
            cliques.push((without(&bag, drop), me));
        }
    }
    let g = build(random_colours(rng, n, colours), edges);
    (g, TreeDecomposition::new(bags, tree))
}

fn without(v: &[usize], i: usize) -> Vec<usize> {
    v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &x)| x).collect()
}

/// Connected series-parallel graph grown from one edge by `steps` random
/// subdivisions or parallel two-paths; treewidth at most 2.
pub fn random_series_parallel<R: Rng>(rng: &mut R, steps: usize, colours: u32) -> ColouredGraph {
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut n = 2;
    for _ in 0..steps {
        let i = rng.gen_range(0..edges.len());
        let (u, v) = edges[i];
        let w = n;
        n += 1;
        if rng.gen_bool(0.5) {
            edges.swap_remove(i);
        }
        edges.push((u, w));
        edges.push((v, w));
    }
    let set: BTreeSet<(usize, usize)> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    let g = build(random_colours(rng, n, colours), set);
    relabel(&g, &permutation(rng, n))
}

/// Connected graph whose first `s` vertices (before relabelling) form a vertex cover.
pub fn random_planted_cover<R: Rng>(rng: &mut R, n: usize, s: usize, p: f64, colours: u32) -> ColouredGraph {
    let s = s.clamp(1, n.max(1));
    loop {
        let mut edges = BTreeSet::new();
        for u in 0..s {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.insert((u, v));
                }
            }
        }
        for v in s..n {
            edges.insert((rng.gen_range(0..s), v));
        }
        let g = build(random_colours(rng, n, colours), edges);
        if g.is_connected() {
            return relabel(&g, &permutation(rng, n));
        }
    }
}

/// Random tree on `n` vertices with maximum degree at most 3.
pub fn random_binary_tree<R: Rng>(rng: &mut R, n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < 3).collect();
        let u = *open.choose(rng).expect("a tree with max degree 3 always has an open vertex");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    edges
}

/// Random 3-CNF; each clause uses three distinct variables.
pub fn random_3cnf<R: Rng>(rng: &mut R, num_vars: usize, num_clauses: usize, positive: bool) -> Cnf {
    assert!(num_vars >= 3, "three distinct variables per clause");
    let vars: Vec<i32> = (1..=num_vars as i32).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            vars.choose_multiple(rng, 3)
                .map(|&x| if positive || rng.gen_bool(0.5) { x } else { -x })
                .collect()
        })
        .collect();
    Cnf::new(num_vars, clauses).expect("literals in range")
}

pub fn permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Copy of `g` with vertex `v` renamed to `perm[v]`.
pub fn relabel(g: &ColouredGraph, perm: &[usize]) -> ColouredGraph {
    let mut colours = vec![0; g.n()];
    for v in 0..g.n() {
        colours[perm[v]] = g.colour_label(v);
    }
    let edges: Vec<_> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    ColouredGraph::new(&colours, &edges).expect("relabelling keeps the graph simple")
}

/// Every unlabelled tree on `n` vertices, once each, as edge lists.
pub fn all_unlabeled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        0 => return vec![],
        1 => return vec![vec![]],
        2 => return vec![vec![(0, 1)]],
        _ => {}
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut code = vec![0usize; n - 2];
    loop {
        let edges = prufer_decode(&code, n);
        if seen.insert(tree_canonical_form(n, &edges)) {
            out.push(edges);
        }
        // Next Prüfer sequence in lexicographic order.
        let mut i = code.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            code[i] += 1;
            if code[i] < n {
                break;
            }
            code[i] = 0;
        }
    }
}

fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in code {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Isomorphism-invariant string for a tree: the smaller AHU encoding over its centres.
pub fn tree_canonical_form(n: usize, edges: &[(usize, usize)]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    // Peel leaves to find the centre(s).
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            for &w in &adj[v] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.iter().map(|&c| ahu(&adj, c, usize::MAX)).min().unwrap_or_default()
}

fn ahu(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut parts: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| ahu(adj, w, v)).collect();
    parts.sort();
    format!("({})", parts.concat())
}
