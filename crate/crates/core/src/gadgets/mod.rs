//! Instance generators for the hardness reductions, used as a structured test corpus.

use thiserror::Error;

use crate::graph::GraphError;

pub mod cnf;
pub mod example1;
pub mod multicut;
pub mod nae_pathwidth;
pub mod split;
pub mod structure;
pub mod vertex_cover;

pub use cnf::{parse_dimacs, to_dimacs, Cnf, CnfError};
pub use example1::gen_example1;
pub use multicut::{sample_multicut_instance, reduce_multicut_tree, MulticutInstance};
pub use nae_pathwidth::{reduce_nae3sat_pathwidth, NaeReduction};
pub use split::{sample_formula, reduce_3sat_split};
pub use structure::{is_bipartite, is_split, is_tree, structural_report, StructureReport};
pub use vertex_cover::{k4_instance, prism_instance, reduce_vc, CubicInstance, VcReduction};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    Degree { vertex: usize, degree: usize, expected: &'static str },
    #[error("edges {0} and {1} share an endpoint and a colour")]
    ImproperEdgeColouring(usize, usize),
    #[error("the input graph is not a tree")]
    NotATree,
    #[error("pair ({0}, {1}) is not a pair of distinct vertices")]
    BadPair(usize, usize),
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
