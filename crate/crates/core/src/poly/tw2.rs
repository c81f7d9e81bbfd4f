//! Colourful partitions into two parts on graphs of treewidth at most 2,
//! one 2-SAT formula per edge `{a, b}` that the two parts separate.

use super::twosat::{two_sat_solve, Lit, TwoSatFormula};
use crate::decomposition::{exact_tree_decomposition, normalize_for_2cp, RootedDecomposition2CP, TreeDecomposition};
use crate::error::SolveError;
use crate::graph::{is_colourful_graph, ColouredGraph, Partition};

/// The formula whose models are exactly the colourful two-part partitions
/// with `a` in the first part and `b` in the second. Variable `u` is "u is in the first part".
pub fn build_phi(g: &ColouredGraph, rd: &RootedDecomposition2CP) -> TwoSatFormula {
    let (a, b) = rd.root_pair();
    let mut f = TwoSatFormula::new(g.n());
    f.add_unit(Lit::pos(a));
    f.add_unit(Lit::neg(b));
    for class in g.colour_classes() {
        for (i, &u) in class.iter().enumerate() {
            for &v in &class[i + 1..] {
                f.add_differ(u, v);
            }
        }
    }
    for i in 0..rd.num_nodes() {
        let below = rd.subtree_vertices(i);
        if let Some((u, v)) = rd.precut(i) {
            f.add_clause(Lit::pos(u), Lit::neg(v));
            for &w in below {
                if w != u {
                    f.add_implication(Lit::neg(u), Lit::neg(w));
                }
                if w != v {
                    f.add_implication(Lit::pos(v), Lit::pos(w));
                }
            }
            if let [_, _, _] = rd.bag(i) {
                let w = *rd.bag(i).iter().find(|&&x| x != u && x != v).expect("third vertex");
                if !rd.attached(g, w, v) {
                    f.add_equal(w, u);
                }
                if !rd.attached(g, w, u) {
                    f.add_equal(w, v);
                }
            }
        }
        if let [u] = *rd.bag(i) {
            for &w in below {
                if w != u {
                    f.add_equal(w, u);
                }
            }
        }
    }
    f
}

/// A colourful partition with at most two blocks, or `None` if there is none.
///
/// Computes a width-2 decomposition itself; fails if the treewidth exceeds 2.
pub fn solve_2cp_treewidth2(g: &ColouredGraph) -> Result<Option<Partition>, SolveError> {
    match exact_tree_decomposition(g, 2)? {
        Some(td) => solve_2cp_treewidth2_with(g, &td),
        None => Err(SolveError::WrongSolver("treewidth exceeds 2".into())),
    }
}

/// Same as [`solve_2cp_treewidth2`] with a caller-supplied decomposition of width ≤ 2.
pub fn solve_2cp_treewidth2_with(g: &ColouredGraph, td: &TreeDecomposition) -> Result<Option<Partition>, SolveError> {
    if td.width() > 2 {
        return Err(SolveError::WrongSolver(format!("decomposition has width {}", td.width())));
    }
    td.check(g)?;
    if g.n() <= 1 || is_colourful_graph(g) && g.is_connected() {
        return Ok(Some(Partition::new(if g.n() == 0 { vec![] } else { vec![(0..g.n()).collect()] })?));
    }
    let comps = g.components();
    match comps.len() {
        1 => {}
        2 => {
            return Ok(comps.iter().all(|c| g.is_colourful_set(c)).then(|| Partition::new(comps.clone())).transpose()?);
        }
        _ => return Ok(None),
    }
    for &(a, b) in g.edges() {
        let rd = normalize_for_2cp(td, g, a, b)?;
        if let Some(x) = two_sat_solve(&build_phi(g, &rd)) {
            let (first, second): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| x[v]);
            return Ok(Some(Partition::new(vec![first, second])?));
        }
    }
    Ok(None)
}
