//! Plain tree decompositions and their text format.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::ColouredGraph;
use crate::io::{content_lines, parse_num, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TdError {
    #[error("decomposition is not valid for the graph: {0}")]
    Invalid(String),
    #[error("{what} = {size} exceeds the cap of {cap}")]
    TooLarge { what: &'static str, size: usize, cap: usize },
    #[error("decomposition has width {width}, at most {max} is supported here")]
    WidthTooLarge { width: usize, max: usize },
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("normalization did not reach a fixed point")]
    NoFixedPoint,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Bags indexed by node, plus undirected tree edges between nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bags are sorted and deduplicated; edges are normalized to `(min, max)`.
    pub fn new(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(i, j)| (i.min(j), i.max(j))).collect();
        edges.sort_unstable();
        TreeDecomposition { bags, edges }
    }

    /// One bag holding every vertex.
    pub fn trivial(n: usize) -> Self {
        TreeDecomposition::new(vec![(0..n).collect()], vec![])
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one; 0 when every bag is empty.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(i, j) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    /// Checks the tree shape and the three decomposition properties, reporting the first failure.
    pub fn check(&self, g: &ColouredGraph) -> Result<(), TdError> {
        let k = self.bags.len();
        let bad = |s: String| Err(TdError::Invalid(s));
        if k == 0 {
            return if g.n() == 0 { Ok(()) } else { bad("no bags".into()) };
        }
        if self.edges.len() != k - 1 {
            return bad(format!("{} tree edges for {k} nodes", self.edges.len()));
        }
        if let Some(&(i, j)) = self.edges.iter().find(|&&(i, j)| i == j || j >= k) {
            return bad(format!("bad tree edge {i}-{j}"));
        }
        let adj = self.adjacency();
        if bfs_order(&adj, 0).len() != k {
            return bad("tree is not connected".into());
        }
        let mut holders = vec![Vec::new(); g.n()];
        for (i, b) in self.bags.iter().enumerate() {
            for &v in b {
                if v >= g.n() {
                    return bad(format!("bag {i} holds vertex {v} outside the graph"));
                }
                holders[v].push(i);
            }
        }
        if let Some(v) = holders.iter().position(Vec::is_empty) {
            return bad(format!("vertex {v} is in no bag"));
        }
        for &(u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok()) {
                return bad(format!("edge {u}-{v} is in no bag"));
            }
        }
        for (v, nodes) in holders.iter().enumerate() {
            let inside = |i: usize| self.bags[i].binary_search(&v).is_ok();
            let mut seen = vec![false; k];
            seen[nodes[0]] = true;
            let mut stack = vec![nodes[0]];
            let mut reached = 1;
            while let Some(i) = stack.pop() {
                for &j in &adj[i] {
                    if !seen[j] && inside(j) {
                        seen[j] = true;
                        reached += 1;
                        stack.push(j);
                    }
                }
            }
            if reached != nodes.len() {
                return bad(format!("bags holding vertex {v} are not connected in the tree"));
            }
        }
        Ok(())
    }

    pub fn validate(&self, g: &ColouredGraph) -> bool {
        self.check(g).is_ok()
    }

    /// Contracts tree edges whose one bag is contained in the other.
    pub fn simplified(&self) -> TreeDecomposition {
        let k = self.bags.len();
        let mut adj: Vec<Vec<usize>> = self.adjacency();
        let mut alive = vec![true; k];
        let subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        loop {
            let mut changed = false;
            for i in 0..k {
                if !alive[i] {
                    continue;
                }
                if let Some(&j) = adj[i].iter().find(|&&j| subset(&self.bags[i], &self.bags[j])) {
                    alive[i] = false;
                    let moved: Vec<usize> = adj[i].drain(..).filter(|&x| x != j).collect();
                    adj[j].retain(|&x| x != i);
                    for x in moved {
                        adj[x].retain(|&y| y != i);
                        adj[x].push(j);
                        adj[j].push(x);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let mut index = vec![usize::MAX; k];
        let mut bags = Vec::new();
        for i in (0..k).filter(|&i| alive[i]) {
            index[i] = bags.len();
            bags.push(self.bags[i].clone());
        }
        let mut edges = Vec::new();
        for i in (0..k).filter(|&i| alive[i]) {
            for &j in &adj[i] {
                if i < j {
                    edges.push((index[i], index[j]));
                }
            }
        }
        TreeDecomposition::new(bags, edges)
    }
}

/// Nodes reachable from `root` in breadth-first order.
pub(crate) fn bfs_order(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[root] = true;
    let mut order = vec![root];
    let mut queue = VecDeque::from([root]);
    while let Some(i) = queue.pop_front() {
        for &j in &adj[i] {
            if !seen[j] {
                seen[j] = true;
                order.push(j);
                queue.push_back(j);
            }
        }
    }
    order
}

/// Parses `td <nodes> <width>`, then `bag <node> <ids...>` and `te <i> <j>` lines.
pub fn parse_td(text: &str) -> Result<TreeDecomposition, TdError> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| ParseError::Truncated("missing `td` header".into()))?;
    if header[0] != "td" || header.len() != 3 {
        return Err(ParseError::Syntax { line: hl, message: "expected `td <nodes> <width>`".into() }.into());
    }
    let nodes: usize = parse_num(header[1], hl, "node count")?;
    let width: usize = parse_num(header[2], hl, "width")?;
    let mut bags: Vec<Option<Vec<usize>>> = vec![None; nodes];
    let mut edges = Vec::new();
    for (ln, t) in lines {
        match t[0] {
            "bag" if t.len() >= 2 => {
                let i: usize = parse_num(t[1], ln, "node id")?;
                if i >= nodes {
                    return Err(ParseError::Syntax { line: ln, message: format!("node {i} out of range") }.into());
                }
                let ids = t[2..].iter().map(|s| parse_num(s, ln, "vertex id")).collect::<Result<Vec<usize>, _>>()?;
                if bags[i].replace(ids).is_some() {
                    return Err(ParseError::Syntax { line: ln, message: format!("bag {i} given twice") }.into());
                }
            }
            "te" if t.len() == 3 => {
                let i: usize = parse_num(t[1], ln, "node id")?;
                let j: usize = parse_num(t[2], ln, "node id")?;
                if i >= nodes || j >= nodes {
                    return Err(ParseError::Syntax { line: ln, message: format!("tree edge {i}-{j} out of range") }.into());
                }
                edges.push((i, j));
            }
            other => {
                return Err(ParseError::Syntax { line: ln, message: format!("unexpected `{other}`") }.into());
            }
        }
    }
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| ParseError::Truncated(format!("bag {i} missing"))))
        .collect::<Result<Vec<_>, _>>()?;
    let td = TreeDecomposition::new(bags, edges);
    if td.width() != width && td.num_nodes() > 0 {
        return Err(TdError::Invalid(format!("header width {width}, bags give {}", td.width())));
    }
    Ok(td)
}

pub fn serialize_td(td: &TreeDecomposition) -> String {
    let mut out = format!("td {} {}\n", td.num_nodes(), td.width());
    for (i, b) in td.bags().iter().enumerate() {
        let _ = write!(out, "bag {i}");
        for v in b {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for &(i, j) in td.tree_edges() {
        let _ = writeln!(out, "te {i} {j}");
    }
    out
}
