//! Exact linear algebra over `Z[i]` and `Q(i)`.
//!
//! Everything here is computed without floating point:
//!
//! * [`GMatrix`] / [`QMatrix`] — dense matrices over Gaussian integers
//!   and Gaussian rationals;
//! * [`det`] — fraction-free Bareiss determinant;
//! * [`char_poly_hermitian`] — integer characteristic polynomial of a
//!   Hermitian matrix via the Faddeev–LeVerrier recurrence;
//! * [`rank_mod_prime`] — rank over the residue field `Z[i]/(p)`;
//! * [`snf`] — Smith normal form `M = V₁·diag(d)·V₂` with unimodular
//!   transforms and canonical first-quadrant divisors;
//! * [`solve_mod_p2_nontrivial`] — a vector `z ≢ 0 (mod p)` with
//!   `Mz ≡ 0 (mod p²)`, when one exists.

mod field;
mod matrix;
mod poly;
mod snf;

pub use field::rank_mod_prime;
pub use matrix::{det, inverse, parse_matrix, GMatrix, QMatrix};
pub use poly::{char_poly_hermitian, IntPolynomial};
pub use snf::{snf, solve_mod_p2_nontrivial, SnfResult};


use crate::gaussint::{self, GaussRat};

/// Errors raised by exact linear algebra.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix is not square ({rows}×{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not Hermitian")]
    NonHermitian,
    #[error("matrix is singular (determinant {det})")]
    Singular { det: GaussRat },
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error("matrix text, line {line}: {reason}")]
    MatrixParse { line: usize, reason: String },
    #[error(transparent)]
    Gauss(#[from] gaussint::Error),
}
