//! Vertex Cover on cubic graphs with a proper 3-edge colouring, reduced to a
//! 3-coloured graph of maximum degree 3.

use super::GadgetError;
use crate::graph::{ColouredGraph, EdgeSet, Partition};

/// A cubic graph whose edges carry colours 1, 2, 3, properly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    colours: Vec<u8>,
}

impl CubicInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, colours: Vec<u8>) -> Result<Self, GadgetError> {
        if colours.len() != edges.len() {
            return Err(GadgetError::InvalidParameter("one colour per edge is required".into()));
        }
        if let Some(&c) = colours.iter().find(|&&c| !(1..=3).contains(&c)) {
            return Err(GadgetError::InvalidParameter(format!("edge colour {c} is not in 1..=3")));
        }
        let mut seen: Vec<[Option<usize>; 3]> = vec![[None; 3]; n];
        let mut degree = vec![0; n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n || u == v {
                return Err(GadgetError::InvalidParameter(format!("bad edge ({u}, {v})")));
            }
            for x in [u, v] {
                degree[x] += 1;
                let slot = &mut seen[x][colours[e] as usize - 1];
                if let Some(f) = *slot {
                    return Err(GadgetError::ImproperEdgeColouring(f, e));
                }
                *slot = Some(e);
            }
        }
        if let Some(v) = (0..n).find(|&v| degree[v] != 3) {
            return Err(GadgetError::Degree { vertex: v, degree: degree[v], expected: "exactly 3" });
        }
        Ok(CubicInstance { n, edges, colours })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colours(&self) -> &[u8] {
        &self.colours
    }

    /// The underlying graph, every vertex coloured 1.
    pub fn graph(&self) -> ColouredGraph {
        ColouredGraph::new(&vec![1; self.n], &self.edges).expect("validated edges")
    }
}

/// K4 with its three perfect matchings as colour classes.
pub fn k4_instance() -> CubicInstance {
    CubicInstance::new(4, vec![(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)], vec![1, 1, 2, 2, 3, 3]).unwrap()
}

/// The triangular prism: triangles 0-1-2 and 3-4-5 joined by a perfect matching.
pub fn prism_instance() -> CubicInstance {
    CubicInstance::new(
        6,
        vec![(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)],
        vec![1, 2, 3, 1, 2, 3, 2, 3, 1],
    )
    .unwrap()
}

fn next(i: u32) -> u32 {
    i % 3 + 1
}

#[derive(Clone, Debug)]
pub struct VcReduction {
    pub graph: ColouredGraph,
    pub k: usize,
    source: CubicInstance,
}

impl VcReduction {
    /// Id of the red vertex of edge `e`.
    pub fn red(&self, e: usize) -> usize {
        e
    }

    /// Ids of the three gadget vertices on arm `colour` (1..=3) of vertex `v`,
    /// innermost first.
    pub fn arm(&self, v: usize, colour: u8) -> [usize; 3] {
        let base = self.source.edges.len() + 9 * v + 3 * (colour as usize - 1);
        [base, base + 1, base + 2]
    }

    /// The partition read off a vertex cover: four blocks per cover vertex, three otherwise.
    pub fn cover_witness(&self, cover: &[usize]) -> Result<Partition, GadgetError> {
        let src = &self.source;
        if let Some(&(u, v)) = src.edges.iter().find(|(u, v)| !cover.contains(u) && !cover.contains(v)) {
            return Err(GadgetError::InvalidParameter(format!("edge ({u}, {v}) is not covered")));
        }
        let mut picked = vec![false; src.edges.len()];
        let mut blocks = Vec::new();
        for v in 0..src.n {
            if cover.contains(&v) {
                blocks.push((1..=3).map(|c| self.arm(v, c)[0]).collect());
                for c in 1..=3u8 {
                    let [_, a2, a3] = self.arm(v, c);
                    let mut b = vec![a2, a3];
                    let e = self.incident(v, c);
                    if !picked[e] {
                        picked[e] = true;
                        b.push(self.red(e));
                    }
                    blocks.push(b);
                }
            } else {
                blocks.extend((1..=3).map(|c| self.arm(v, c).to_vec()));
            }
        }
        Ok(Partition::new(blocks)?)
    }

    /// One edge per red vertex (towards its second endpoint) and the three
    /// edges from the triangle outwards in every gadget.
    pub fn deletion_witness(&self) -> EdgeSet {
        let src = &self.source;
        let mut f = Vec::new();
        for (e, &(_, v)) in src.edges.iter().enumerate() {
            f.push((self.red(e), self.arm(v, src.colours[e])[2]));
        }
        for v in 0..src.n {
            for c in 1..=3 {
                let [a1, a2, _] = self.arm(v, c);
                f.push((a1, a2));
            }
        }
        EdgeSet::new(f)
    }

    fn incident(&self, v: usize, colour: u8) -> usize {
        let src = &self.source;
        (0..src.edges.len())
            .find(|&e| src.colours[e] == colour && (src.edges[e].0 == v || src.edges[e].1 == v))
            .expect("cubic with a proper colouring")
    }
}

/// Red vertex per edge (ids `0..m`, coloured by the edge), then nine gadget
/// vertices per source vertex. Target size `3n + s`.
pub fn reduce_vc(inst: &CubicInstance, s: usize) -> Result<VcReduction, GadgetError> {
    let (n, m) = (inst.n, inst.edges.len());
    let mut colours: Vec<u32> = inst.colours.iter().map(|&c| c as u32).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        let base = m + 9 * v;
        for i in 1..=3u32 {
            let a = base + 3 * (i as usize - 1);
            colours.extend([i, next(next(i)), next(i)]);
            edges.extend([(a, a + 1), (a + 1, a + 2)]);
        }
        edges.extend([(base, base + 3), (base + 3, base + 6), (base, base + 6)]);
    }
    for (e, &(u, v)) in inst.edges.iter().enumerate() {
        let c = inst.colours[e] as usize;
        for x in [u, v] {
            edges.push((e, m + 9 * x + 3 * (c - 1) + 2));
        }
    }
    let graph = ColouredGraph::new(&colours, &edges)?;
    Ok(VcReduction { graph, k: 3 * n + s, source: inst.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_colourful_graph, is_colourful_partition};

    #[test]
    fn k4_reduction_shape() {
        let r = reduce_vc(&k4_instance(), 3).unwrap();
        assert_eq!(r.graph.n(), 9 * 4 + 6);
        assert_eq!(r.k, 15);
        assert_eq!(r.graph.num_colours(), 3);
        assert_eq!(r.graph.max_degree(), 3);
        // Both neighbours of a red vertex share a colour different from its own.
        for e in 0..6 {
            let nb = r.graph.neighbours(r.red(e));
            assert_eq!(nb.len(), 2);
            assert_eq!(r.graph.colour(nb[0]), r.graph.colour(nb[1]));
            assert_ne!(r.graph.colour(nb[0]), r.graph.colour(e));
        }
    }

    #[test]
    fn cover_witness_is_valid() {
        let r = reduce_vc(&k4_instance(), 3).unwrap();
        let p = r.cover_witness(&[0, 1, 2]).unwrap();
        assert_eq!(p.len(), 15);
        assert!(is_colourful_partition(&r.graph, &p).unwrap());
        assert!(r.cover_witness(&[0, 1]).is_err());
    }

    #[test]
    fn deletion_witness_leaves_colourful_graph() {
        let r = reduce_vc(&k4_instance(), 3).unwrap();
        let f = r.deletion_witness();
        assert_eq!(f.len(), 18);
        assert!(is_colourful_graph(&r.graph.without_edges(&f).unwrap()));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            CubicInstance::new(4, vec![(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)], vec![1, 1, 1, 2, 3, 3]),
            Err(GadgetError::ImproperEdgeColouring(..))
        ));
        assert!(matches!(CubicInstance::new(2, vec![(0, 1)], vec![1]), Err(GadgetError::Degree { .. })));
        prism_instance();
    }
}
