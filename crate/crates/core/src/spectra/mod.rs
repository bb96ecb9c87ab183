//! Multivariate characteristic polynomials of adjacency pencils and exact
//! orthogonal similarity certificates.

mod certificate;
mod compare;
mod pencil;
mod symbolic;

pub use certificate::{reconstruct_q, reconstruct_q_over, OrthogonalCertificate};
pub use compare::{compare, compare_with, find_separating_point, CompareOptions, SpectralVerdict, Witness};
pub use pencil::{eval_char_poly, pencil_for, BlockTerm, Pencil, Variant};
pub use symbolic::{symbolic_char_poly, MultiPoly, MAX_SYMBOLIC_BLOCKS, MAX_SYMBOLIC_ORDER};
