//! Nice tree decompositions: leaf, introduce, forget and binary join nodes.

use super::td::{bfs_order, TdError, TreeDecomposition};
use crate::graph::ColouredGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<usize>,
    pub children: Vec<usize>,
}

/// Nodes are stored children-first, so index order is a valid bottom-up schedule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
    root: usize,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn width(&self) -> usize {
        self.nodes.iter().map(|x| x.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    /// The underlying plain decomposition.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|x| x.bag.clone()).collect();
        let edges = self.nodes.iter().enumerate().flat_map(|(i, x)| x.children.iter().map(move |&c| (c, i))).collect();
        TreeDecomposition::new(bags, edges)
    }

    /// Checks node kinds, the root condition and the decomposition properties.
    pub fn check(&self, g: &ColouredGraph) -> Result<(), TdError> {
        let bad = |s: String| Err(TdError::Invalid(s));
        for (i, x) in self.nodes.iter().enumerate() {
            if x.children.iter().any(|&c| c >= i) {
                return bad(format!("node {i} has a child stored after it"));
            }
            let child_bag = |k: usize| &self.nodes[x.children[k]].bag;
            let ok = match x.kind {
                NodeKind::Leaf => x.children.is_empty() && x.bag.is_empty(),
                NodeKind::Introduce(v) => {
                    x.children.len() == 1 && !child_bag(0).contains(&v) && with(child_bag(0), v) == x.bag
                }
                NodeKind::Forget(v) => {
                    x.children.len() == 1 && child_bag(0).contains(&v) && without(child_bag(0), v) == x.bag
                }
                NodeKind::Join => x.children.len() == 2 && *child_bag(0) == x.bag && *child_bag(1) == x.bag,
            };
            if !ok {
                return bad(format!("node {i} violates the rule for {:?}", x.kind));
            }
        }
        let root = &self.nodes[self.root];
        let root_ok = root.bag.is_empty()
            && (matches!(root.kind, NodeKind::Forget(_)) || (self.nodes.len() == 1 && root.kind == NodeKind::Leaf));
        if !root_ok {
            return bad("root must be a forget node with an empty bag".into());
        }
        self.to_tree_decomposition().check(g)
    }

    pub fn validate(&self, g: &ColouredGraph) -> bool {
        self.check(g).is_ok()
    }
}

fn with(bag: &[usize], v: usize) -> Vec<usize> {
    let mut b = bag.to_vec();
    b.push(v);
    b.sort_unstable();
    b
}

fn without(bag: &[usize], v: usize) -> Vec<usize> {
    bag.iter().copied().filter(|&x| x != v).collect()
}

/// Converts a decomposition (rooted at node 0) into nice form of the same width.
///
/// A decomposition whose bags are all empty becomes a single leaf.
pub fn to_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition, TdError> {
    let k = td.num_nodes();
    if k == 0 || td.bags().iter().all(Vec::is_empty) {
        return Ok(NiceTreeDecomposition { nodes: vec![NiceNode { kind: NodeKind::Leaf, bag: vec![], children: vec![] }], root: 0 });
    }
    let adj = td.adjacency();
    if td.tree_edges().len() + 1 != k || bfs_order(&adj, 0).len() != k {
        return Err(TdError::Invalid("bag graph is not a tree".into()));
    }
    let order = bfs_order(&adj, 0);
    let mut parent = vec![usize::MAX; k];
    for &i in &order {
        for &j in &adj[i] {
            if j != parent[i] && j != 0 && parent[j] == usize::MAX {
                parent[j] = i;
            }
        }
    }
    let mut b = Builder { nodes: Vec::new() };
    // Children-first: process tree nodes in reverse BFS order.
    let mut top = vec![usize::MAX; k];
    for &i in order.iter().rev() {
        let bag = &td.bags()[i];
        let kids: Vec<usize> = adj[i].iter().copied().filter(|&j| parent[j] == i).collect();
        let mut branches: Vec<usize> = kids.iter().map(|&j| b.transition(top[j], bag)).collect();
        if branches.is_empty() {
            let leaf = b.push(NodeKind::Leaf, vec![], vec![]);
            branches.push(b.transition(leaf, bag));
        }
        let mut acc = branches[0];
        for &other in &branches[1..] {
            acc = b.push(NodeKind::Join, bag.clone(), vec![acc, other]);
        }
        top[i] = acc;
    }
    let root = b.transition(top[0], &[]);
    Ok(NiceTreeDecomposition { nodes: b.nodes, root })
}

struct Builder {
    nodes: Vec<NiceNode>,
}

impl Builder {
    fn push(&mut self, kind: NodeKind, bag: Vec<usize>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Forget chain then introduce chain from the bag of `from` to `target`.
    fn transition(&mut self, from: usize, target: &[usize]) -> usize {
        let mut cur = from;
        let start = self.nodes[from].bag.clone();
        for &v in start.iter().filter(|v| !target.contains(v)) {
            let bag = without(&self.nodes[cur].bag, v);
            cur = self.push(NodeKind::Forget(v), bag, vec![cur]);
        }
        for &v in target.iter().filter(|v| !start.contains(v)) {
            let bag = with(&self.nodes[cur].bag, v);
            cur = self.push(NodeKind::Introduce(v), bag, vec![cur]);
        }
        cur
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_single_bag() {
        let g = ColouredGraph::new(&[1, 2, 3], &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let nice = to_nice(&TreeDecomposition::trivial(3)).unwrap();
        assert!(nice.validate(&g));
        let count = |f: fn(&NodeKind) -> bool| nice.nodes().iter().filter(|x| f(&x.kind)).count();
        assert_eq!(count(|k| matches!(k, NodeKind::Leaf)), 1);
        assert_eq!(count(|k| matches!(k, NodeKind::Introduce(_))), 3);
        assert_eq!(count(|k| matches!(k, NodeKind::Forget(_))), 3);
        assert_eq!(nice.nodes().len(), 7);
        assert_eq!(nice.width(), 2);
    }

    #[test]
    fn empty_graph_is_a_leaf() {
        let nice = to_nice(&TreeDecomposition::new(vec![vec![]], vec![])).unwrap();
        assert_eq!(nice.nodes().len(), 1);
        assert!(nice.validate(&ColouredGraph::empty()));
    }

    #[test]
    fn star_decomposition_gets_joins() {
        let g = ColouredGraph::new(&[1, 2, 3, 4], &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 3]], vec![(0, 1), (0, 2), (0, 3)]);
        assert!(td.validate(&g));
        let nice = to_nice(&td).unwrap();
        assert!(nice.validate(&g));
        assert_eq!(nice.nodes().iter().filter(|x| x.kind == NodeKind::Join).count(), 2);
        assert_eq!(nice.width(), 1);
    }

    #[test]
    fn rejects_non_tree() {
        let td = TreeDecomposition::new(vec![vec![0], vec![1]], vec![]);
        assert!(to_nice(&td).is_err());
    }
}
