//! 2-SAT via strongly connected components of the implication graph.

use thiserror::Error;

/// A literal over variables `0..n`: `var` or `¬var`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lit(usize);

impl Lit {
    pub fn pos(var: usize) -> Self {
        Lit(2 * var)
    }

    pub fn neg(var: usize) -> Self {
        Lit(2 * var + 1)
    }

    pub fn new(var: usize, value: bool) -> Self {
        if value {
            Lit::pos(var)
        } else {
            Lit::neg(var)
        }
    }

    pub fn var(self) -> usize {
        self.0 / 2
    }

    pub fn is_negated(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn negate(self) -> Self {
        Lit(self.0 ^ 1)
    }

    fn index(self) -> usize {
        self.0
    }

    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.var()] != self.is_negated()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("clause references variable {var} but the formula has {num_vars} variables")]
pub struct VariableOutOfRange {
    pub var: usize,
    pub num_vars: usize,
}

/// Conjunction of two-literal clauses. A unit clause `l` is stored as `(l, l)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoSatFormula {
    num_vars: usize,
    clauses: Vec<(Lit, Lit)>,
}

impl TwoSatFormula {
    pub fn new(num_vars: usize) -> Self {
        TwoSatFormula { num_vars, clauses: Vec::new() }
    }

    pub fn from_clauses(num_vars: usize, clauses: Vec<(Lit, Lit)>) -> Result<Self, VariableOutOfRange> {
        if let Some(l) = clauses.iter().flat_map(|&(a, b)| [a, b]).find(|l| l.var() >= num_vars) {
            return Err(VariableOutOfRange { var: l.var(), num_vars });
        }
        Ok(TwoSatFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[(Lit, Lit)] {
        &self.clauses
    }

    /// Adds `a ∨ b`. Panics if either literal is out of range.
    pub fn add_clause(&mut self, a: Lit, b: Lit) {
        assert!(
            a.var() < self.num_vars && b.var() < self.num_vars,
            "literal out of range for {} variables",
            self.num_vars
        );
        self.clauses.push((a, b));
    }

    pub fn add_unit(&mut self, a: Lit) {
        self.add_clause(a, a);
    }

    /// `a ⇒ b`.
    pub fn add_implication(&mut self, a: Lit, b: Lit) {
        self.add_clause(a.negate(), b);
    }

    /// `x_u = x_v`.
    pub fn add_equal(&mut self, u: usize, v: usize) {
        self.add_implication(Lit::pos(u), Lit::pos(v));
        self.add_implication(Lit::pos(v), Lit::pos(u));
    }

    /// `x_u ≠ x_v`.
    pub fn add_differ(&mut self, u: usize, v: usize) {
        self.add_clause(Lit::pos(u), Lit::pos(v));
        self.add_clause(Lit::neg(u), Lit::neg(v));
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        assignment.len() == self.num_vars && self.clauses.iter().all(|&(a, b)| a.eval(assignment) || b.eval(assignment))
    }
}

/// Satisfying assignment, or `None` if the formula is unsatisfiable.
///
/// Deterministic: the same formula always yields the same assignment.
pub fn two_sat_solve(f: &TwoSatFormula) -> Option<Vec<bool>> {
    let nodes = 2 * f.num_vars;
    let mut succ = vec![Vec::new(); nodes];
    for &(a, b) in &f.clauses {
        succ[a.negate().index()].push(b.index());
        succ[b.negate().index()].push(a.index());
    }
    let comp = tarjan_scc(&succ);
    let mut assignment = Vec::with_capacity(f.num_vars);
    for v in 0..f.num_vars {
        let (p, n) = (comp[Lit::pos(v).index()], comp[Lit::neg(v).index()]);
        if p == n {
            return None;
        }
        // Tarjan numbers components in reverse topological order.
        assignment.push(p < n);
    }
    Some(assignment)
}

/// Component id per node; ids follow reverse topological order of the condensation.
pub(crate) fn tarjan_scc(succ: &[Vec<usize>]) -> Vec<usize> {
    const UNSET: usize = usize::MAX;
    let n = succ.len();
    let mut index = vec![UNSET; n];
    let mut low = vec![0; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut next_comp = 0;

    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        call.push((root, 0));
        while let Some(&mut (u, ref mut edge)) = call.last_mut() {
            if *edge == 0 && index[u] == UNSET {
                index[u] = next_index;
                low[u] = next_index;
                next_index += 1;
                stack.push(u);
                on_stack[u] = true;
            }
            if let Some(&w) = succ[u].get(*edge) {
                *edge += 1;
                if index[w] == UNSET {
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[u] = low[u].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[u]);
            }
            if low[u] == index[u] {
                loop {
                    let w = stack.pop().expect("tarjan stack holds the component");
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if w == u {
                        break;
                    }
                }
                next_comp += 1;
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_satisfiable() {
        let (x, y) = (0, 1);
        let mut f = TwoSatFormula::new(2);
        f.add_clause(Lit::pos(x), Lit::pos(y));
        f.add_clause(Lit::neg(x), Lit::pos(y));
        let a = two_sat_solve(&f).unwrap();
        assert!(a[y]);
        assert!(f.is_satisfied_by(&a));
    }

    #[test]
    fn contradiction_is_unsat() {
        let mut f = TwoSatFormula::new(1);
        f.add_unit(Lit::pos(0));
        f.add_unit(Lit::neg(0));
        assert_eq!(two_sat_solve(&f), None);
    }

    #[test]
    fn equalities_and_differences_chain() {
        let mut f = TwoSatFormula::new(4);
        f.add_unit(Lit::pos(0));
        f.add_equal(0, 1);
        f.add_differ(1, 2);
        f.add_equal(2, 3);
        assert_eq!(two_sat_solve(&f), Some(vec![true, true, false, false]));
        f.add_equal(3, 0);
        assert_eq!(two_sat_solve(&f), None);
    }

    #[test]
    fn out_of_range_is_rejected() {
        assert_eq!(
            TwoSatFormula::from_clauses(1, vec![(Lit::pos(0), Lit::neg(3))]),
            Err(VariableOutOfRange { var: 3, num_vars: 1 })
        );
    }

    #[test]
    fn empty_formula() {
        assert_eq!(two_sat_solve(&TwoSatFormula::new(0)), Some(vec![]));
        assert_eq!(two_sat_solve(&TwoSatFormula::new(2)).map(|a| a.len()), Some(2));
    }
}
