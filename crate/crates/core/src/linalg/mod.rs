//! Exact dense linear algebra over the integers and rationals.

mod det;
mod factor;
mod matrix;
pub mod modular;
mod poly;
mod smith;
mod solve;

pub use det::{bareiss_det, rank};
pub use factor::{factorize, is_probable_prime, FactorBudget, Factorization};
pub use matrix::{level, IntMatrix, RatMatrix};
pub use poly::{char_poly, discriminant, resultant, IntPolynomial};
pub use smith::{last_invariant_factor, smith_normal_form, SmithDecomposition};
pub use solve::solve_right;
