//! Exact rational linear algebra plus a small floating-point symmetric eigensolver.

mod charpoly;
mod eigen;
mod matrix;
mod rational;

pub use charpoly::{charpoly_exact, CharPoly};
pub use eigen::{
    eigen_symmetric, eigenvalues_symmetric, Eigenvalue, RealMatrix, Spectrum, SymmetricEigen, MAX_SWEEPS,
    MULTIPLICITY_TOL, OFF_DIAGONAL_TOL, SYMMETRY_TOL,
};
pub use matrix::{mat_mul, mat_pow, RationalMatrix};
pub use rational::{integrality_check, ParseRationalError, RationalScalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {left:?} times {right:?}")]
    DimensionMismatch { left: (usize, usize), right: (usize, usize) },
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    NoConvergence { sweeps: usize },
}
