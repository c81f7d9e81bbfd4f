//! 3-SAT reduced to 2-colourful partition on split graphs.

use super::cnf::Cnf;
use super::GadgetError;
use crate::graph::ColouredGraph;

/// A small satisfiable formula: four variables, three clauses.
pub fn sample_formula() -> Cnf {
    Cnf::new(4, vec![vec![1, -2, 3], vec![1, 2, -4], vec![2, -3, 4]]).unwrap()
}

/// Ids: literal `x_i` is `2i`, its negation `2i+1`; `y_i = 2n+2i`,
/// `y'_i = 2n+2i+1`; `z = 4n`; `C_j = 4n+1+2j`, `C'_j = 4n+2+2j`.
/// The literals and `z` form a clique; `y_i`, `y'_i` see both literals of
/// variable `i`; `C'_j` sees only `z`; `C_j` sees its three literals.
/// `y'_i` and `C'_j` repeat the colours of `y_i` and `C_j`; the rest are unique.
pub fn reduce_3sat_split(f: &Cnf) -> Result<(ColouredGraph, usize), GadgetError> {
    f.check_three_distinct()?;
    let n = f.num_vars;
    let m = f.clauses.len();
    let z = 4 * n;
    let total = 4 * n + 1 + 2 * m;
    let mut colours: Vec<u32> = (1..=total as u32).collect();
    let mut edges = Vec::new();
    for a in 0..2 * n {
        for b in a + 1..2 * n {
            edges.push((a, b));
        }
        edges.push((a, z));
    }
    for i in 0..n {
        let (y, y2) = (2 * n + 2 * i, 2 * n + 2 * i + 1);
        colours[y2] = colours[y];
        edges.extend([(2 * i, y), (2 * i + 1, y), (2 * i, y2), (2 * i + 1, y2)]);
    }
    for (j, clause) in f.clauses.iter().enumerate() {
        let (c, c2) = (4 * n + 1 + 2 * j, 4 * n + 2 + 2 * j);
        colours[c2] = colours[c];
        edges.push((c2, z));
        for &lit in clause {
            edges.push((c, 2 * Cnf::var(lit) + usize::from(lit < 0)));
        }
    }
    Ok((ColouredGraph::new(&colours, &edges)?, 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sample_formula_counts() {
        let (g, k) = reduce_3sat_split(&sample_formula()).unwrap();
        assert_eq!(k, 2);
        assert_eq!(g.n(), 23);
        assert_eq!(g.m(), 36 + 16 + 3 + 9);
        assert_eq!(g.num_colours(), 23 - 4 - 3);
    }

    #[test]
    fn malformed_clause() {
        let f = Cnf::new(3, vec![vec![1, -1, 2]]).unwrap();
        assert!(reduce_3sat_split(&f).is_err());
    }
}
