//! Coloured graphs, partitions, edge sets and the validators every solver reports against.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {0} has colour 0; colours are positive integers")]
    ZeroColour(usize),
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
}

/// Simple undirected graph on `0..n` with one colour per vertex.
///
/// Colours are arbitrary positive labels on input; internally they are
/// renumbered densely (`0..num_colours()`) in increasing label order, so the
/// dense id of a colour does not depend on vertex order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColouredGraph {
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    colour: Vec<usize>,
    labels: Vec<u32>,
}

impl ColouredGraph {
    pub fn new(colours: &[u32], edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = colours.len();
        if let Some(v) = colours.iter().position(|&c| c == 0) {
            return Err(GraphError::ZeroColour(v));
        }
        let mut labels: Vec<u32> = colours.to_vec();
        labels.sort_unstable();
        labels.dedup();
        let dense: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let colour = colours.iter().map(|c| dense[c]).collect();

        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(ColouredGraph { adj, edges: normalized, colour, labels })
    }

    /// Graph with no vertices.
    pub fn empty() -> Self {
        ColouredGraph { adj: Vec::new(), edges: Vec::new(), colour: Vec::new(), labels: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Dense colour id of `v`, in `0..num_colours()`.
    pub fn colour(&self, v: usize) -> usize {
        self.colour[v]
    }

    /// Original colour label of `v`.
    pub fn colour_label(&self, v: usize) -> u32 {
        self.labels[self.colour[v]]
    }

    /// Original labels of all vertices, in vertex order.
    pub fn colour_labels(&self) -> Vec<u32> {
        self.colour.iter().map(|&c| self.labels[c]).collect()
    }

    pub fn num_colours(&self) -> usize {
        self.labels.len()
    }

    /// Vertices grouped by dense colour id.
    pub fn colour_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colours()];
        for v in 0..self.n() {
            classes[self.colour[v]].push(v);
        }
        classes
    }

    /// Same vertices and colours with the edges of `f` removed.
    pub fn without_edges(&self, f: &EdgeSet) -> Result<Self, GraphError> {
        for &(u, v) in f.iter() {
            if !self.has_edge(u, v) {
                return Err(GraphError::NotAnEdge(u, v));
            }
        }
        let kept: Vec<_> = self.edges.iter().copied().filter(|e| !f.contains(e.0, e.1)).collect();
        ColouredGraph::new(&self.colour_labels(), &kept)
    }

    /// Subgraph induced by `vertices` (relabelled `0..len` in the given order)
    /// together with the map from new ids back to old ids.
    pub fn induced(&self, vertices: &[usize]) -> (Self, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let colours: Vec<u32> = vertices.iter().map(|&v| self.colour_label(v)).collect();
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        let g = ColouredGraph::new(&colours, &edges).expect("induced subgraph of a valid graph");
        (g, vertices.to_vec())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether `set` induces a connected subgraph. The empty set counts as connected.
    pub fn is_connected_set(&self, set: &[usize]) -> bool {
        let Some(&start) = set.first() else { return true };
        let mut inside = vec![false; self.n()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n()];
        seen[start] = true;
        let mut reached = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if inside[w] && !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == set.len()
    }

    /// Whether no two vertices of `set` share a colour.
    pub fn is_colourful_set(&self, set: &[usize]) -> bool {
        let mut used = vec![false; self.num_colours()];
        for &v in set {
            let c = self.colour[v];
            if used[c] {
                return false;
            }
            used[c] = true;
        }
        true
    }
}

/// Partition of a vertex set into non-empty, pairwise disjoint blocks.
///
/// Blocks are kept sorted and ordered by their smallest vertex, so two
/// partitions with the same blocks compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut blocks = blocks;
        let mut all = Vec::new();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(GraphError::MalformedPartition("empty block".into()));
            }
            b.sort_unstable();
            all.extend_from_slice(b);
        }
        all.sort_unstable();
        if let Some(w) = all.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::MalformedPartition(format!("vertex {} appears twice", w[0])));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks })
    }

    /// Partition of `0..labels.len()` where equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(v);
        }
        Partition::new(by_label.into_values().collect()).expect("labels give disjoint blocks")
    }

    pub fn singletons(n: usize) -> Self {
        Partition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every vertex in `0..n`; `None` for uncovered vertices.
    pub fn block_of(&self, n: usize) -> Vec<Option<usize>> {
        let mut out = vec![None; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                if v < n {
                    out[v] = Some(i);
                }
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Set of undirected edges, stored as sorted `(u, v)` pairs with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<(usize, usize)>);

impl EdgeSet {
    pub fn new(edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut v: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }

    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.0.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.0
    }
}

/// Which of the two optimisation problems a result answers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Problem {
    /// Fewest blocks in a colourful partition.
    Partition,
    /// Fewest edge deletions leaving a colourful graph.
    Components,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Partition => "partition",
            Problem::Components => "components",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SolverTag {
    Oracle,
    TwoColouredMatching,
    TreewidthTwoSat,
    TreeDecompositionDp,
    VertexCoverKernel,
    NonUniqueDcs,
}

impl SolverTag {
    pub fn name(self) -> &'static str {
        match self {
            SolverTag::Oracle => "oracle",
            SolverTag::TwoColouredMatching => "matching",
            SolverTag::TreewidthTwoSat => "tw2-2sat",
            SolverTag::TreeDecompositionDp => "dp",
            SolverTag::VertexCoverKernel => "vc",
            SolverTag::NonUniqueDcs => "nonunique",
        }
    }
}

impl fmt::Display for SolverTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Partition(Partition),
    Deletions(EdgeSet),
}

/// Optimum of one solver run together with a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub problem: Problem,
    pub value: usize,
    pub witness: Witness,
    pub solver: SolverTag,
    /// Search nodes or table entries the solver touched; only meaningful per solver.
    pub explored: u64,
}

impl SolveResult {
    pub fn partition(value: usize, p: Partition, solver: SolverTag, explored: u64) -> Self {
        SolveResult { problem: Problem::Partition, value, witness: Witness::Partition(p), solver, explored }
    }

    pub fn deletions(f: EdgeSet, solver: SolverTag, explored: u64) -> Self {
        SolveResult { problem: Problem::Components, value: f.len(), witness: Witness::Deletions(f), solver, explored }
    }

    /// Checks that the witness is valid for `g` and has the claimed value.
    pub fn validate(&self, g: &ColouredGraph) -> Result<bool, GraphError> {
        match (&self.problem, &self.witness) {
            (Problem::Partition, Witness::Partition(p)) => Ok(p.len() == self.value && is_colourful_partition(g, p)?),
            (Problem::Components, Witness::Deletions(f)) => {
                Ok(f.len() == self.value && is_colourful_graph(&g.without_edges(f)?))
            }
            _ => Ok(false),
        }
    }
}

/// Whether every block of `p` is colourful and induces a connected subgraph of `g`.
pub fn is_colourful_partition(g: &ColouredGraph, p: &Partition) -> Result<bool, GraphError> {
    let n = g.n();
    let mut covered = vec![false; n];
    for block in p.blocks() {
        for &v in block {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|c| !c) {
        return Err(GraphError::MalformedPartition(format!("vertex {v} is not covered")));
    }
    Ok(p.blocks().iter().all(|b| g.is_colourful_set(b) && g.is_connected_set(b)))
}

/// Whether every connected component of `g` is colourful.
pub fn is_colourful_graph(g: &ColouredGraph) -> bool {
    g.components().iter().all(|c| g.is_colourful_set(c))
}

/// Connected components of `g - f`, as a partition of `V(g)`.
pub fn components_after_deletion(g: &ColouredGraph, f: &EdgeSet) -> Result<Partition, GraphError> {
    let rest = g.without_edges(f)?;
    Partition::new(rest.components())
}

/// Largest number of vertices sharing one colour (0 for the empty graph).
pub fn colour_multiplicity(g: &ColouredGraph) -> usize {
    g.colour_classes().iter().map(Vec::len).max().unwrap_or(0)
}

/// Edges of `g` whose endpoints lie in different blocks of `p`.
pub fn crossing_edges(g: &ColouredGraph, p: &Partition) -> EdgeSet {
    let block = p.block_of(g.n());
    EdgeSet::new(g.edges().iter().copied().filter(|&(u, v)| block[u] != block[v]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(colours: [u32; 3]) -> ColouredGraph {
        ColouredGraph::new(&colours, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(ColouredGraph::new(&[1, 1], &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(ColouredGraph::new(&[1, 1], &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            ColouredGraph::new(&[1, 1], &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert_eq!(ColouredGraph::new(&[0], &[]), Err(GraphError::ZeroColour(0)));
    }

    #[test]
    fn colours_are_densified_by_label() {
        let g = ColouredGraph::new(&[40, 7, 40, 9], &[]).unwrap();
        assert_eq!(g.num_colours(), 3);
        assert_eq!((g.colour(0), g.colour(1), g.colour(3)), (2, 0, 1));
        assert_eq!(g.colour_labels(), vec![40, 7, 40, 9]);
    }

    #[test]
    fn rainbow_triangle_is_one_block() {
        let g = triangle([1, 2, 3]);
        let p = Partition::new(vec![vec![0, 1, 2]]).unwrap();
        assert!(is_colourful_partition(&g, &p).unwrap());
    }

    #[test]
    fn repeated_colour_block_is_rejected() {
        let g = ColouredGraph::new(&[1, 1], &[(0, 1)]).unwrap();
        let p = Partition::new(vec![vec![0, 1]]).unwrap();
        assert!(!is_colourful_partition(&g, &p).unwrap());
        assert!(!is_colourful_graph(&g));
    }

    #[test]
    fn disconnected_block_is_rejected() {
        let g = ColouredGraph::new(&[1, 2, 3], &[(0, 1)]).unwrap();
        let p = Partition::new(vec![vec![0, 2], vec![1]]).unwrap();
        assert!(!is_colourful_partition(&g, &p).unwrap());
    }

    #[test]
    fn malformed_partition_errors() {
        let g = triangle([1, 2, 3]);
        let out_of_range = Partition::new(vec![vec![0, 1, 2, 5]]).unwrap();
        assert!(matches!(is_colourful_partition(&g, &out_of_range), Err(GraphError::VertexOutOfRange { .. })));
        let short = Partition::new(vec![vec![0, 1]]).unwrap();
        assert!(matches!(is_colourful_partition(&g, &short), Err(GraphError::MalformedPartition(_))));
        assert!(Partition::new(vec![vec![0], vec![0, 1]]).is_err());
        assert!(Partition::new(vec![vec![]]).is_err());
    }

    #[test]
    fn edgeless_graph_is_colourful() {
        let g = ColouredGraph::new(&[1, 1, 1], &[]).unwrap();
        assert!(is_colourful_graph(&g));
    }

    #[test]
    fn deletion_components_on_a_path() {
        let g = ColouredGraph::new(&[1, 2, 3], &[(0, 1), (1, 2)]).unwrap();
        let p = components_after_deletion(&g, &EdgeSet::new([(0, 1)])).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 2]]);
        let whole = components_after_deletion(&g, &EdgeSet::default()).unwrap();
        assert_eq!(whole.blocks(), &[vec![0, 1, 2]]);
        assert_eq!(components_after_deletion(&g, &EdgeSet::new([(0, 2)])), Err(GraphError::NotAnEdge(0, 2)));
    }

    #[test]
    fn multiplicity() {
        assert_eq!(colour_multiplicity(&triangle([1, 2, 3])), 1);
        assert_eq!(colour_multiplicity(&triangle([5, 2, 5])), 2);
        assert_eq!(colour_multiplicity(&ColouredGraph::empty()), 0);
    }

    #[test]
    fn crossing_edges_of_partition() {
        let g = triangle([1, 2, 3]);
        let p = Partition::new(vec![vec![0], vec![1, 2]]).unwrap();
        assert_eq!(crossing_edges(&g, &p).as_slice(), &[(0, 1), (0, 2)]);
    }
}
