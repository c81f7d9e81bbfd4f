//! Polynomial-time solvers.

pub mod matching;
pub mod tw2;
pub mod two_coloured;
pub mod twosat;

pub use matching::{hopcroft_karp, Matching};
pub use tw2::{build_phi, solve_2cp_treewidth2, solve_2cp_treewidth2_with};
pub use two_coloured::solve_two_coloured;
pub use twosat::{two_sat_solve, Lit, TwoSatFormula, VariableOutOfRange};
