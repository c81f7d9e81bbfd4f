//! Exact solvers that are exponential only in a structural parameter.

pub mod dcs;
pub mod dp;
pub mod nonunique;
pub mod vertex_cover;

pub use dp::{dp_components, dp_partition, run_dp, DpKey, DpTables};
pub use vertex_cover::{
    greedy_vertex_cover, kernel_bound, solve_partition_vc, solve_partition_vc_report, vertex_cover_at_most, VcKernelReport,
};
pub use dcs::{dcs_brute, dcs_solve, DcsError, DcsInstance};
pub use nonunique::{non_unique_vertices, solve_min_partition_nonunique, solve_partition_nonunique};
