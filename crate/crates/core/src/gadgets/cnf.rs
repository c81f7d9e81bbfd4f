//! CNF formulas with DIMACS-style literals (`±(var + 1)`).

use std::fmt::Write as _;

use thiserror::Error;

use crate::io::{content_lines, parse_num, ParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("clause {clause}: literal {literal} is zero or exceeds {num_vars} variables")]
    LiteralOutOfRange { clause: usize, literal: i32, num_vars: usize },
    #[error("clause {0} must have exactly three distinct variables")]
    NotThreeDistinct(usize),
    #[error("clause {0} contains a negative literal")]
    NegativeLiteral(usize),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self, CnfError> {
        for (j, c) in clauses.iter().enumerate() {
            if let Some(&l) = c.iter().find(|l| **l == 0 || l.unsigned_abs() as usize > num_vars) {
                return Err(CnfError::LiteralOutOfRange { clause: j, literal: l, num_vars });
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    /// Zero-based variable of a literal.
    pub fn var(lit: i32) -> usize {
        lit.unsigned_abs() as usize - 1
    }

    pub fn lit_value(lit: i32, assignment: &[bool]) -> bool {
        assignment[Cnf::var(lit)] == (lit > 0)
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| Cnf::lit_value(l, assignment)))
    }

    /// Every clause has a true and a false literal.
    pub fn is_nae_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            let t = c.iter().filter(|&&l| Cnf::lit_value(l, assignment)).count();
            t > 0 && t < c.len()
        })
    }

    /// Checks that each clause has exactly three distinct variables.
    pub fn check_three_distinct(&self) -> Result<(), CnfError> {
        for (j, c) in self.clauses.iter().enumerate() {
            let mut vars: Vec<usize> = c.iter().map(|&l| Cnf::var(l)).collect();
            vars.sort_unstable();
            vars.dedup();
            if c.len() != 3 || vars.len() != 3 {
                return Err(CnfError::NotThreeDistinct(j));
            }
        }
        Ok(())
    }

    pub fn check_positive(&self) -> Result<(), CnfError> {
        match self.clauses.iter().position(|c| c.iter().any(|&l| l < 0)) {
            Some(j) => Err(CnfError::NegativeLiteral(j)),
            None => Ok(()),
        }
    }
}

/// Parses `p cnf <vars> <clauses>` followed by zero-terminated clauses.
/// Lines starting with `c` are comments.
pub fn parse_dimacs(text: &str) -> Result<Cnf, CnfError> {
    let mut num_vars = None;
    let mut expected = 0usize;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (ln, tokens) in content_lines(text) {
        if tokens[0] == "c" {
            continue;
        }
        if tokens[0] == "p" {
            if tokens.len() != 4 || tokens[1] != "cnf" {
                return Err(ParseError::Syntax { line: ln, message: "expected `p cnf <vars> <clauses>`".into() }.into());
            }
            num_vars = Some(parse_num::<usize>(tokens[2], ln, "variable count")?);
            expected = parse_num(tokens[3], ln, "clause count")?;
            continue;
        }
        if num_vars.is_none() {
            return Err(ParseError::Syntax { line: ln, message: "clause before `p cnf` header".into() }.into());
        }
        for tok in tokens {
            let lit: i32 = parse_num(tok, ln, "literal")?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let num_vars = num_vars.ok_or_else(|| ParseError::Truncated("missing `p cnf` header".into()))?;
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != expected {
        return Err(ParseError::Truncated(format!("header declares {expected} clauses, found {}", clauses.len())).into());
    }
    Cnf::new(num_vars, clauses)
}

pub fn to_dimacs(f: &Cnf) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        for l in c {
            let _ = write!(out, "{l} ");
        }
        out.push_str("0\n");
    }
    out
}
