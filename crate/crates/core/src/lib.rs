//! Exact solvers for partitioning a vertex-coloured graph into connected
//! colourful parts (fewest parts) and for deleting the fewest edges so that
//! every component is colourful.

pub mod decomposition;
pub mod error;
pub mod fpt;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod poly;
pub mod random;
mod util;

pub use error::SolveError;
pub use graph::{
    colour_multiplicity, components_after_deletion, crossing_edges, is_colourful_graph, is_colourful_partition,
    ColouredGraph, EdgeSet, GraphError, Partition, Problem, SolveResult, SolverTag, Witness,
};
