//! Exact arithmetic and linear algebra shared by every other module:
//! rationals, prime fields, dense and sparse matrices, multivariate Laurent
//! polynomials and polynomials in a formal parameter `t`.

pub mod field;
pub mod laurent;
pub mod matrix;
pub mod rational;
pub mod sparse;
pub mod tpoly;

pub use field::{Field, Fp};
pub use laurent::{LaurentError, LaurentPoly};
pub use matrix::{DenseMatrix, Subspace};
pub use rational::Rational;
pub use sparse::{bareiss_rank, rank_kernel, SparseMatrix};
pub use tpoly::{tpoly_coeff, TPoly};

/// Divides `p` by `q` exactly as Laurent polynomials.
pub fn laurent_divide_exact(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
    p.divide_exact(q)
}

/// Dense rational matrices, the common case.
pub type QMatrix = DenseMatrix<Rational>;
