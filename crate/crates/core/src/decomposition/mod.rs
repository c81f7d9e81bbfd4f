//! Tree decompositions: construction, nice form and the rooted form used by the width-2 solver.

pub mod nice;
pub mod rooted;
pub mod td;
pub mod treewidth;

pub use nice::{to_nice, NiceNode, NiceTreeDecomposition, NodeKind};
pub use rooted::{normalize_for_2cp, RootedDecomposition2CP};
pub use td::{parse_td, serialize_td, TdError, TreeDecomposition};
pub use treewidth::{decomposition_from_order, exact_tree_decomposition, treewidth, TREEWIDTH_CAP};
