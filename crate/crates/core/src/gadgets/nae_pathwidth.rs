//! Not-All-Equal positive 3-SAT reduced to 2-colourful partition on planar
//! bipartite graphs of maximum degree 3 with a width-3 path decomposition.

use super::cnf::Cnf;
use super::GadgetError;
use crate::decomposition::TreeDecomposition;
use crate::graph::ColouredGraph;

#[derive(Clone, Debug)]
pub struct NaeReduction {
    pub graph: ColouredGraph,
    pub k: usize,
    pub path_decomposition: TreeDecomposition,
}

#[derive(Default)]
struct Builder {
    colours: Vec<u32>,
    edges: Vec<(usize, usize)>,
    next_colour: u32,
    bags: Vec<Vec<usize>>,
}

impl Builder {
    fn colour(&mut self) -> u32 {
        self.next_colour += 1;
        self.next_colour
    }

    fn vertex(&mut self, colour: u32) -> usize {
        self.colours.push(colour);
        self.colours.len() - 1
    }

    /// A top and a bottom vertex sharing a fresh colour.
    fn pair(&mut self) -> (usize, usize) {
        let c = self.colour();
        (self.vertex(c), self.vertex(c))
    }

    fn path(&mut self, vs: &[usize]) {
        self.edges.extend(vs.windows(2).map(|w| (w[0], w[1])));
    }

    fn bag(&mut self, vs: &[usize]) {
        self.bags.push(vs.to_vec());
    }
}

/// Both rows of one gadget column block: entries are (top, bottom).
type Row = Vec<(usize, usize)>;

/// Two rows of vertices joined along each row, with crossing edges between the
/// first two columns, chains of `α` colours below, and consecutive gadgets
/// stitched by one edge per row.
pub fn reduce_nae3sat_pathwidth(f: &Cnf) -> Result<NaeReduction, GadgetError> {
    f.check_three_distinct()?;
    f.check_positive()?;
    let mut b = Builder::default();
    let occurrences: Vec<Vec<usize>> = (0..f.num_vars)
        .map(|x| (0..f.clauses.len()).filter(|&j| f.clauses[j].iter().any(|&l| Cnf::var(l) == x)).collect())
        .collect();

    let mut alpha: Vec<Vec<u32>> = Vec::new();
    let mut last: Option<(usize, usize)> = None;
    let stitch = |b: &mut Builder, last: Option<(usize, usize)>, first: (usize, usize)| {
        if let Some((t, u)) = last {
            b.edges.extend([(t, first.0), (u, first.1)]);
            b.bag(&[t, u, first.0, first.1]);
        }
    };

    for occ in &occurrences {
        let row: Row = (0..4).map(|_| b.pair()).collect();
        let [a, bb, c, d] = [row[0], row[1], row[2], row[3]];
        stitch(&mut b, last, a);
        b.path(&[a.0, bb.0, c.0, d.0]);
        b.path(&[a.1, bb.1, c.1, d.1]);
        b.edges.extend([(a.0, bb.1), (a.1, bb.0)]);
        let colours: Vec<u32> = (0..2 * occ.len()).map(|_| b.colour()).collect();
        let chain: Vec<usize> = colours.iter().map(|&col| b.vertex(col)).collect();
        let mut hang = vec![c.0];
        hang.extend_from_slice(&chain);
        b.path(&hang);
        b.bag(&[a.0, a.1, bb.0, bb.1]);
        b.bag(&[bb.0, bb.1, c.0, c.1]);
        for w in chain.windows(2) {
            b.bag(&[c.0, c.1, w[0], w[1]]);
        }
        b.bag(&[c.0, c.1, d.0, d.1]);
        alpha.push(colours);
        last = Some(d);
    }

    for (j, clause) in f.clauses.iter().enumerate() {
        // 1-based rank of clause j among the clauses of variable x.
        let rank = |x: usize| occurrences[x].iter().position(|&c| c == j).expect("occurs") + 1;
        let (xg, xh, xi) = (Cnf::var(clause[0]), Cnf::var(clause[1]), Cnf::var(clause[2]));
        let (r, s, t) = (rank(xg), rank(xh), rank(xi));
        let row: Row = (0..5).map(|_| b.pair()).collect();
        let [e, ff, g, h, i] = [row[0], row[1], row[2], row[3], row[4]];
        stitch(&mut b, last, e);
        b.path(&[e.0, ff.0, g.0, h.0, i.0]);
        b.path(&[e.1, ff.1, g.1, h.1, i.1]);
        b.edges.extend([(e.0, ff.1), (e.1, ff.0)]);
        let beta = b.colour();
        let va = b.vertex(alpha[xg][2 * r - 2]);
        let vbeta = b.vertex(beta);
        let vb = b.vertex(alpha[xh][2 * s - 1]);
        let vc = b.vertex(alpha[xg][2 * r - 1]);
        let vbeta2 = b.vertex(beta);
        let vd = b.vertex(alpha[xi][2 * t - 1]);
        b.path(&[g.0, va, vbeta, vb, g.1]);
        b.path(&[h.0, vc, vbeta2, vd, h.1]);
        b.bag(&[e.0, e.1, ff.0, ff.1]);
        b.bag(&[ff.0, ff.1, g.0, g.1]);
        b.bag(&[g.0, g.1, va, vbeta]);
        b.bag(&[g.0, g.1, vbeta, vb]);
        b.bag(&[g.0, g.1, h.0, h.1]);
        b.bag(&[h.0, h.1, vc, vbeta2]);
        b.bag(&[h.0, h.1, vbeta2, vd]);
        b.bag(&[h.0, h.1, i.0, i.1]);
        last = Some(i);
    }

    let graph = ColouredGraph::new(&b.colours, &b.edges)?;
    let tree = (1..b.bags.len()).map(|i| (i - 1, i)).collect();
    let bags = if b.bags.is_empty() { vec![Vec::new()] } else { b.bags };
    Ok(NaeReduction { graph, k: 2, path_decomposition: TreeDecomposition::new(bags, tree) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::structure::is_bipartite;

    #[test]
    fn single_clause_shape() {
        let f = Cnf::new(3, vec![vec![1, 2, 3]]).unwrap();
        let r = reduce_nae3sat_pathwidth(&f).unwrap();
        assert_eq!(r.graph.n(), 3 * 10 + 16);
        assert!(r.graph.max_degree() <= 3);
        assert!(is_bipartite(&r.graph));
        assert!(r.graph.is_connected());
        assert!(r.path_decomposition.check(&r.graph).is_ok());
        assert_eq!(r.path_decomposition.width(), 3);
        assert_eq!(crate::colour_multiplicity(&r.graph), 2);
    }

    #[test]
    fn negative_literals_rejected() {
        let f = Cnf::new(3, vec![vec![1, -2, 3]]).unwrap();
        assert!(reduce_nae3sat_pathwidth(&f).is_err());
    }
}
