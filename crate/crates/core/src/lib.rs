//! Certifying that a graph is identified by its generalized block Laplacian
//! spectrum.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple graphs, graph6 I/O, degree partitions, automorphism orbits.
//! * [`linalg`]: exact integer and rational matrices, Smith normal form,
//!   characteristic polynomials, discriminants and factorization.
//! * [`walk`]: generalized walk matrices `[e_1, A e_1, ..., A^{n-1} e_p]`.
//! * [`wl`]: 1-WL and 2-WL refinement over colored matrices.
//! * [`spectra`]: multivariate characteristic polynomials and orthogonal
//!   similarity certificates.
//! * [`criterion`]: the walk-matrix/discriminant identification test.
//! * [`experiment`]: seeded `G(n, 1/2)` experiments.

pub mod criterion;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod linalg;
pub mod spectra;
pub mod walk;
pub mod wl;

pub use error::{Error, Result};
pub use graph::Graph;
pub use linalg::{IntMatrix, IntPolynomial, RatMatrix};
