//! Weisfeiler–Leman refinement.
//!
//! 2-WL runs over arbitrary [`ColoredMatrix`] inputs so that pencils with
//! extra cell tags reuse the same engine. Colors are renamed canonically each
//! round by sorting length-prefixed signatures, pooled across every input in
//! a joint run, so ids are comparable between graphs.

mod checks;
mod colored;
mod refine;

pub use checks::{cell_tagged_matrix, verify_partial_refinement, verify_power_invariant, CellTagging};
pub use colored::{ColoredMatrix, PairPartition};
pub use refine::{
    atomic_type_coloring, closure, wl1_joint, wl1_stable, wl2_equivalent, wl2_joint, wl2_joint_colored, wl2_rounds,
    wl2_stable, WlColoring,
};
