//! Graphs with at most two colours: colourful components have at most two
//! vertices, so both problems reduce to a maximum matching on the
//! bichromatic edges.

use super::matching::hopcroft_karp;
use crate::error::SolveError;
use crate::graph::{ColouredGraph, EdgeSet, Partition, Problem, SolveResult, SolverTag};

/// Optimum for either problem on a graph with at most two colours.
///
/// Partition size is `n - |M|`; the deletion count is `m - |M|`, where `M`
/// is a maximum matching among edges whose ends have different colours.
pub fn solve_two_coloured(g: &ColouredGraph, problem: Problem) -> Result<SolveResult, SolveError> {
    if g.num_colours() > 2 {
        return Err(SolveError::WrongSolver(format!("{} colours, the matching solver needs at most 2", g.num_colours())));
    }
    // Left side: colour 0, right side: colour 1.
    let mut side_index = vec![0; g.n()];
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for v in 0..g.n() {
        if g.colour(v) == 0 {
            side_index[v] = left.len();
            left.push(v);
        } else {
            side_index[v] = right.len();
            right.push(v);
        }
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| g.colour(u) != g.colour(v))
        .map(|&(u, v)| if g.colour(u) == 0 { (side_index[u], side_index[v]) } else { (side_index[v], side_index[u]) })
        .collect();
    let m = hopcroft_karp(left.len(), right.len(), &edges);
    let explored = edges.len() as u64;
    let mut blocks: Vec<Vec<usize>> = m.pairs().into_iter().map(|(l, r)| vec![left[l], right[r]]).collect();
    let mut matched = vec![false; g.n()];
    for b in &blocks {
        matched[b[0]] = true;
        matched[b[1]] = true;
    }
    blocks.extend((0..g.n()).filter(|&v| !matched[v]).map(|v| vec![v]));
    let p = Partition::new(blocks)?;
    Ok(match problem {
        Problem::Partition => SolveResult::partition(p.len(), p, SolverTag::TwoColouredMatching, explored),
        Problem::Components => {
            let block = p.block_of(g.n());
            let f = EdgeSet::new(g.edges().iter().copied().filter(|&(u, v)| block[u] != block[v]));
            SolveResult::deletions(f, SolverTag::TwoColouredMatching, explored)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_path() {
        let g = ColouredGraph::new(&[1, 2, 1, 2], &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = solve_two_coloured(&g, Problem::Partition).unwrap();
        assert_eq!(r.value, 2);
        assert!(r.validate(&g).unwrap());
        let r = solve_two_coloured(&g, Problem::Components).unwrap();
        assert_eq!(r.value, 1);
        assert!(r.validate(&g).unwrap());
    }

    #[test]
    fn monochromatic_edge() {
        let g = ColouredGraph::new(&[1, 1], &[(0, 1)]).unwrap();
        assert_eq!(solve_two_coloured(&g, Problem::Partition).unwrap().value, 2);
        assert_eq!(solve_two_coloured(&g, Problem::Components).unwrap().value, 1);
    }

    #[test]
    fn three_colours_rejected() {
        let g = ColouredGraph::new(&[1, 2, 3], &[]).unwrap();
        assert!(matches!(solve_two_coloured(&g, Problem::Partition), Err(SolveError::WrongSolver(_))));
    }
}
