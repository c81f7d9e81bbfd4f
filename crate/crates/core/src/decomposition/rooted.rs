//! Width-2 decompositions rooted at an edge `{a, b}` with strictly nested
//! adjacent bags, pairwise distinct bags and connected subtree vertex sets,
//! plus the head subtree and its precut pairs.

use std::collections::{BTreeSet, VecDeque};

use super::td::{bfs_order, TdError, TreeDecomposition};
use crate::graph::ColouredGraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedDecomposition2CP {
    a: usize,
    b: usize,
    bags: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    subtree_vertices: Vec<Vec<usize>>,
    head: Vec<bool>,
    precut: Vec<Option<(usize, usize)>>,
}

impl RootedDecomposition2CP {
    pub fn root_pair(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    /// Node 0 is the root; nodes are numbered in breadth-first order.
    pub fn bag(&self, i: usize) -> &[usize] {
        &self.bags[i]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn parent(&self, i: usize) -> Option<usize> {
        self.parent[i]
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    /// `V[i]`: the union of the bags in the subtree rooted at `i`, sorted.
    pub fn subtree_vertices(&self, i: usize) -> &[usize] {
        &self.subtree_vertices[i]
    }

    pub fn in_head(&self, i: usize) -> bool {
        self.head[i]
    }

    pub fn precut(&self, i: usize) -> Option<(usize, usize)> {
        self.precut[i]
    }

    /// Adjacent in `g`, or some bag is exactly `{u, v}`.
    pub fn attached(&self, g: &ColouredGraph, u: usize, v: usize) -> bool {
        let pair = [u.min(v), u.max(v)];
        g.has_edge(u, v) || self.bags.iter().any(|b| b[..] == pair)
    }

    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let edges = self.parent.iter().enumerate().filter_map(|(i, p)| p.map(|p| (p, i))).collect();
        TreeDecomposition::new(self.bags.clone(), edges)
    }

    /// Verifies validity, nesting, distinctness, connectivity, the root bag and the precut annotation.
    pub fn check(&self, g: &ColouredGraph) -> Result<(), String> {
        self.to_tree_decomposition().check(g).map_err(|e| e.to_string())?;
        if self.bags[0] != [self.a.min(self.b), self.a.max(self.b)] {
            return Err("root bag is not {a, b}".into());
        }
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                let (x, y) = (&self.bags[p], &self.bags[i]);
                let nested = (subset(x, y) || subset(y, x)) && x != y;
                if !nested {
                    return Err(format!("bags of nodes {p} and {i} are not strictly nested"));
                }
            }
        }
        let distinct: BTreeSet<&Vec<usize>> = self.bags.iter().collect();
        if distinct.len() != self.bags.len() {
            return Err("two bags are identical".into());
        }
        for i in 0..self.num_nodes() {
            if !g.is_connected_set(&self.subtree_vertices[i]) {
                return Err(format!("V[{i}] does not induce a connected subgraph"));
            }
            let size_one_above = {
                let mut cur = Some(i);
                let mut found = false;
                while let Some(c) = cur {
                    found |= self.bags[c].len() == 1;
                    cur = self.parent[c];
                }
                found
            };
            if self.head[i] == size_one_above {
                return Err(format!("head marking of node {i} is wrong"));
            }
            match (self.head[i], self.precut[i]) {
                (true, Some((u, v))) if self.bags[i].contains(&u) && self.bags[i].contains(&v) && u != v => {}
                (false, None) => {}
                _ => return Err(format!("precut of node {i} is missing or misplaced")),
            }
        }
        Ok(())
    }
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

/// Mutable tree used while rewriting.
struct Work {
    bags: Vec<Vec<usize>>,
    alive: Vec<bool>,
    adj: Vec<BTreeSet<usize>>,
    root: Option<usize>,
}

impl Work {
    fn add(&mut self, bag: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.alive.push(true);
        self.adj.push(BTreeSet::new());
        self.bags.len() - 1
    }

    fn link(&mut self, i: usize, j: usize) {
        self.adj[i].insert(j);
        self.adj[j].insert(i);
    }

    fn unlink(&mut self, i: usize, j: usize) {
        self.adj[i].remove(&j);
        self.adj[j].remove(&i);
    }

    /// Deletes `i`, attaching its other neighbours to `keep`.
    fn remove_into(&mut self, i: usize, keep: usize) {
        let nbrs: Vec<usize> = self.adj[i].iter().copied().collect();
        for x in &nbrs {
            self.unlink(i, *x);
        }
        for x in nbrs {
            if x != keep {
                self.link(x, keep);
            }
        }
        self.alive[i] = false;
    }

    fn live(&self) -> Vec<usize> {
        (0..self.bags.len()).filter(|&i| self.alive[i]).collect()
    }

    fn drop_empty(&mut self) -> bool {
        let mut changed = false;
        for i in self.live() {
            if self.bags[i].is_empty() {
                match self.adj[i].iter().next().copied() {
                    Some(keep) => self.remove_into(i, keep),
                    None => self.alive[i] = false,
                }
                changed = true;
            }
        }
        changed
    }

    fn insert_intersections(&mut self) -> bool {
        let mut changed = false;
        for i in self.live() {
            let nbrs: Vec<usize> = self.adj[i].iter().copied().filter(|&j| j > i).collect();
            for j in nbrs {
                let (x, y) = (&self.bags[i], &self.bags[j]);
                if !subset(x, y) && !subset(y, x) {
                    let k = self.add(intersection(x, y));
                    self.unlink(i, j);
                    self.link(i, k);
                    self.link(k, j);
                    changed = true;
                }
            }
        }
        changed
    }

    /// Merges one pair of identical bags; the root survives if involved.
    fn merge_identical(&mut self) -> bool {
        let live = self.live();
        for (x, &i) in live.iter().enumerate() {
            for &j in &live[x + 1..] {
                if self.bags[i] != self.bags[j] {
                    continue;
                }
                let (keep, gone) = if Some(j) == self.root { (j, i) } else { (i, j) };
                let towards = self.next_hop(gone, keep);
                let others: Vec<usize> = self.adj[gone].iter().copied().filter(|&y| y != towards).collect();
                for y in &others {
                    self.unlink(gone, *y);
                    self.link(*y, keep);
                }
                self.unlink(gone, towards);
                self.alive[gone] = false;
                return true;
            }
        }
        false
    }

    /// Neighbour of `from` on the tree path to `to`.
    fn next_hop(&self, from: usize, to: usize) -> usize {
        let mut prev = vec![usize::MAX; self.bags.len()];
        prev[to] = to;
        let mut queue = VecDeque::from([to]);
        while let Some(i) = queue.pop_front() {
            for &j in &self.adj[i] {
                if prev[j] == usize::MAX {
                    prev[j] = i;
                    queue.push_back(j);
                }
            }
        }
        prev[from]
    }

    fn ensure_root(&mut self, a: usize, b: usize) -> bool {
        if self.root.is_some() {
            return false;
        }
        let pair = vec![a.min(b), a.max(b)];
        let live = self.live();
        if let Some(&i) = live.iter().find(|&&i| self.bags[i] == pair) {
            self.root = Some(i);
            return true;
        }
        let host = *live
            .iter()
            .find(|&&i| subset(&pair, &self.bags[i]))
            .expect("an edge lies in some bag");
        let r = self.add(pair);
        self.link(r, host);
        self.root = Some(r);
        true
    }

    /// Parent pointers and breadth-first order from the root.
    fn orient(&self) -> (Vec<usize>, Vec<usize>) {
        let root = self.root.expect("rooted");
        let adj: Vec<Vec<usize>> = self.adj.iter().map(|s| s.iter().copied().collect()).collect();
        let order = bfs_order(&adj, root);
        let mut parent = vec![usize::MAX; self.bags.len()];
        for &i in &order {
            for &j in &adj[i] {
                if j != root && parent[j] == usize::MAX && parent[i] != j {
                    parent[j] = i;
                }
            }
        }
        (parent, order)
    }

    fn subtree_sets(&self, parent: &[usize], order: &[usize]) -> Vec<Vec<usize>> {
        let mut sets: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.bags.len()];
        for &i in order.iter().rev() {
            sets[i].extend(self.bags[i].iter().copied());
            if parent[i] != usize::MAX {
                let s = std::mem::take(&mut sets[i]);
                sets[parent[i]].extend(s.iter().copied());
                sets[i] = s;
            }
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Splits the first node (breadth-first) whose subtree vertices are disconnected.
    fn split_one(&mut self, g: &ColouredGraph) -> bool {
        let (parent, order) = self.orient();
        let sets = self.subtree_sets(&parent, &order);
        for &i in &order[1..] {
            let (h, back) = g.induced(&sets[i]);
            let comps = h.components();
            if comps.len() <= 1 {
                continue;
            }
            let smallest = comps.iter().min_by_key(|c| (c.len(), c[0])).expect("at least two components");
            let u_set: Vec<usize> = smallest.iter().map(|&x| back[x]).collect();
            let w_set: Vec<usize> = sets[i].iter().copied().filter(|x| u_set.binary_search(x).is_err()).collect();
            let p = parent[i];
            let subtree: Vec<usize> = order.iter().copied().filter(|&j| self.descends(j, i, &parent)).collect();
            for part in [&u_set, &w_set] {
                // Top-down copy; a copy that is empty or equal to its parent is skipped
                // and its children hang from that parent instead.
                let mut host = vec![usize::MAX; self.bags.len()];
                for &j in &subtree {
                    let up = if j == i { p } else { host[parent[j]] };
                    let bag = intersection(&self.bags[j], part);
                    if bag.is_empty() || bag == self.bags[up] {
                        host[j] = up;
                    } else {
                        let c = self.add(bag);
                        self.link(c, up);
                        host[j] = c;
                    }
                }
            }
            for &j in &subtree {
                let nbrs: Vec<usize> = self.adj[j].iter().copied().collect();
                for x in nbrs {
                    self.unlink(j, x);
                }
                self.alive[j] = false;
            }
            return true;
        }
        false
    }

    fn descends(&self, j: usize, i: usize, parent: &[usize]) -> bool {
        let mut cur = j;
        loop {
            if cur == i {
                return true;
            }
            if parent[cur] == usize::MAX {
                return false;
            }
            cur = parent[cur];
        }
    }
}

/// Rewrites `td` into the rooted normal form for the pair `(a, b)`.
pub fn normalize_for_2cp(
    td: &TreeDecomposition,
    g: &ColouredGraph,
    a: usize,
    b: usize,
) -> Result<RootedDecomposition2CP, TdError> {
    if !g.has_edge(a, b) {
        return Err(TdError::NotAnEdge(a, b));
    }
    if td.width() > 2 {
        return Err(TdError::WidthTooLarge { width: td.width(), max: 2 });
    }
    td.check(g)?;
    if !g.is_connected() {
        return Err(TdError::Invalid("the graph must be connected".into()));
    }
    let mut w = Work {
        bags: td.bags().to_vec(),
        alive: vec![true; td.num_nodes()],
        adj: vec![BTreeSet::new(); td.num_nodes()],
        root: None,
    };
    for &(i, j) in td.tree_edges() {
        w.link(i, j);
    }
    let limit = 64 * (td.num_nodes() + g.n() + 4) * (g.n() + 4);
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > limit {
            return Err(TdError::NoFixedPoint);
        }
        let mut changed = w.drop_empty();
        changed |= w.insert_intersections();
        if w.merge_identical() {
            continue;
        }
        changed |= w.ensure_root(a, b);
        if changed {
            continue;
        }
        if !w.split_one(g) {
            break;
        }
    }
    Ok(finish(&w, a, b))
}

fn finish(w: &Work, a: usize, b: usize) -> RootedDecomposition2CP {
    let (parent_old, order) = w.orient();
    let sets_old = w.subtree_sets(&parent_old, &order);
    let mut index = vec![usize::MAX; w.bags.len()];
    for (k, &i) in order.iter().enumerate() {
        index[i] = k;
    }
    let k = order.len();
    let bags: Vec<Vec<usize>> = order.iter().map(|&i| w.bags[i].clone()).collect();
    let subtree_vertices: Vec<Vec<usize>> = order.iter().map(|&i| sets_old[i].clone()).collect();
    let parent: Vec<Option<usize>> =
        order.iter().map(|&i| (parent_old[i] != usize::MAX).then(|| index[parent_old[i]])).collect();
    let mut children = vec![Vec::new(); k];
    for (i, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(i);
        }
    }
    let mut head = vec![false; k];
    let mut precut = vec![None; k];
    head[0] = true;
    precut[0] = Some((a, b));
    for j in 1..k {
        let p = parent[j].expect("non-root has a parent");
        if !head[p] || bags[j].len() == 1 {
            continue;
        }
        head[j] = true;
        let (u, v) = precut[p].expect("head nodes carry precuts");
        precut[j] = match (bags[p].len(), bags[j].len()) {
            (2, 3) => Some((u, v)),
            (3, 2) => {
                let wv = *bags[p].iter().find(|&&x| x != u && x != v).expect("three-vertex bag");
                if bags[j].contains(&v) && bags[j].contains(&wv) {
                    Some((wv, v))
                } else if bags[j].contains(&u) && bags[j].contains(&wv) {
                    Some((u, wv))
                } else {
                    None
                }
            }
            _ => None,
        };
    }
    RootedDecomposition2CP { a, b, bags, parent, children, subtree_vertices, head, precut }
}
