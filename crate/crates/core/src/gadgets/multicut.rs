//! Multicut on trees of maximum degree 3, reduced to colourful partition on
//! trees of colour-multiplicity 2.

use std::collections::VecDeque;

use super::GadgetError;
use crate::graph::ColouredGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticutInstance {
    pub n: usize,
    pub tree: Vec<(usize, usize)>,
    pub pairs: Vec<(usize, usize)>,
}

/// A ten-vertex tree of maximum degree 3 with ten pairs;
/// vertices `a..j` are ids `0..10`.
pub fn sample_multicut_instance() -> MulticutInstance {
    let [a, b, c, d, e, f, g, h, i, j] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9];
    MulticutInstance {
        n: 10,
        tree: vec![(g, d), (d, b), (b, a), (a, c), (c, f), (f, j), (b, e), (e, h), (e, i)],
        pairs: vec![(a, c), (a, h), (a, j), (b, c), (b, d), (b, h), (b, i), (b, j), (c, d), (c, j)],
    }
}

fn adjacency(inst: &MulticutInstance) -> Result<Vec<Vec<usize>>, GadgetError> {
    let n = inst.n;
    if n == 0 || inst.tree.len() + 1 != n {
        return Err(GadgetError::NotATree);
    }
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &inst.tree {
        if u >= n || v >= n || u == v {
            return Err(GadgetError::NotATree);
        }
        adj[u].push(v);
        adj[v].push(u);
    }
    if let Some(v) = (0..n).find(|&v| adj[v].len() > 3) {
        return Err(GadgetError::Degree { vertex: v, degree: adj[v].len(), expected: "at most 3" });
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                stack.push(u);
            }
        }
    }
    if seen.contains(&false) {
        return Err(GadgetError::NotATree);
    }
    for &(u, v) in &inst.pairs {
        if u >= n || v >= n || u == v {
            return Err(GadgetError::BadPair(u, v));
        }
    }
    Ok(adj)
}

/// Neighbour of `from` on the tree path towards `to`.
fn first_step(adj: &[Vec<usize>], from: usize, to: usize) -> usize {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[to] = to;
    let mut queue = VecDeque::from([to]);
    while let Some(v) = queue.pop_front() {
        for &u in &adj[v] {
            if parent[u] == usize::MAX {
                parent[u] = v;
                queue.push_back(u);
            }
        }
    }
    parent[from]
}

/// Tree vertices keep their ids; pair `p = (s, t)` adds `s_t` (id `n + 2p`,
/// hung near `s`) and `t_s` (id `n + 2p + 1`) sharing a private colour. Mates
/// reached through the same tree edge form one path hung from the vertex,
/// ordered by mate id. Target size `r + 1`.
///
/// The hardened variant takes two copies, recolours the pair colours of the
/// second, and joins the copies of the first vertex of degree at most one
/// through two new vertices of a shared new colour. Target size `2(r + 1)`.
pub fn reduce_multicut_tree(
    inst: &MulticutInstance,
    r: usize,
    hardened: bool,
) -> Result<(ColouredGraph, usize), GadgetError> {
    let adj = adjacency(inst)?;
    let n = inst.n;
    let p = inst.pairs.len();
    let mut colours: Vec<u32> = (1..=n as u32).collect();
    let mut edges = inst.tree.clone();
    // (host, direction, mate, id)
    let mut hung: Vec<(usize, usize, usize, usize)> = Vec::new();
    for (idx, &(s, t)) in inst.pairs.iter().enumerate() {
        colours.extend([(n + idx + 1) as u32; 2]);
        hung.push((s, first_step(&adj, s, t), t, n + 2 * idx));
        hung.push((t, first_step(&adj, t, s), s, n + 2 * idx + 1));
    }
    hung.sort();
    for group in hung.chunk_by(|x, y| (x.0, x.1) == (y.0, y.1)) {
        let mut prev = group[0].0;
        for &(_, _, _, id) in group {
            edges.push((prev, id));
            prev = id;
        }
    }
    let size = n + 2 * p;
    if !hardened {
        return Ok((ColouredGraph::new(&colours, &edges)?, r + 1));
    }
    let degree = |v: usize| edges.iter().filter(|&&(a, b)| a == v || b == v).count();
    let x = (0..size).find(|&v| degree(v) <= 1).expect("a finite tree has a leaf");
    let mut both = colours.clone();
    both.extend((0..size).map(|v| if v < n { colours[v] } else { colours[v] + p as u32 }));
    let y_colour = (n + 2 * p + 1) as u32;
    both.extend([y_colour, y_colour]);
    let mut all = edges.clone();
    all.extend(edges.iter().map(|&(u, v)| (u + size, v + size)));
    let (y1, y2) = (2 * size, 2 * size + 1);
    all.extend([(x, y1), (y1, y2), (y2, x + size)]);
    Ok((ColouredGraph::new(&both, &all)?, 2 * (r + 1)))
}
