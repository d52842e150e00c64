use serde::Serialize;
use thiserror::Error;

use crate::families::{make_family, FamilyError, FamilySpec};
use crate::linalg::{eigenvalues_symmetric, LinalgError};
use crate::walk::symmetrize;

/// Integer coefficient lists (ascending powers) of the Chebyshev polynomials
/// of the second kind `U_0..U_m`, with `U_{-1} = -1` by convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChebyshevTable {
    polys: Vec<Vec<i64>>,
}

impl ChebyshevTable {
    /// Coefficients stay within `i64` for `m <= 60`.
    pub fn new(m: usize) -> Self {
        assert!(m <= 60, "coefficients of U_{m} overflow i64");
        let mut polys = vec![vec![1], vec![0, 2]];
        for n in 1..m {
            // U_{n+1} = 2x U_n - U_{n-1}
            let mut next = vec![0; n + 2];
            for (i, c) in polys[n].iter().enumerate() {
                next[i + 1] += 2 * c;
            }
            for (i, c) in polys[n - 1].iter().enumerate() {
                next[i] -= c;
            }
            polys.push(next);
        }
        polys.truncate(m + 1);
        ChebyshevTable { polys }
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn coefficients(&self, n: usize) -> &[i64] {
        &self.polys[n]
    }

    /// `U_n(x)` for `-1 <= n <= max_degree`.
    pub fn eval(&self, n: i64, x: f64) -> f64 {
        if n == -1 {
            return -1.0;
        }
        self.polys[n as usize].iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChebyshevReport {
    pub max_residual: f64,
    pub eigenvalues: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChebyshevError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("paths need at least two vertices, got r = {0}")]
    InvalidR(usize),
    #[error("eigenvector residual {residual:e} for l = {l} exceeds tolerance")]
    ResidualExceeded { l: usize, residual: f64 },
    #[error("eigenvalue {lambda} for l = {l} is not in the numeric spectrum of T")]
    MissingEigenvalue { l: usize, lambda: f64 },
}

/// Verifies the explicit eigenvectors of `T` on the odd cycle `C_k` with two
/// copies of the path `P_r` glued at one cycle vertex (tails of `r - 1`
/// edges).
///
/// For `lambda_l = cos((2l - 1) pi / (2(r - 1)))`, `l = 1..r-1`, the vector is
/// zero on the cycle, `U_{j-1}(lambda_l)` on the `j`-th vertex of one tail and
/// `-U_{j-1}(lambda_l)` on the other.
pub fn chebyshev_eigen_check(k: usize, r: usize, tol: f64) -> Result<ChebyshevReport, ChebyshevError> {
    if r < 2 {
        return Err(ChebyshevError::InvalidR(r));
    }
    let tail = r - 1;
    let g = make_family(FamilySpec::TwoTail(k, tail))?;
    let n = g.vertex_count();
    let spectrum = eigenvalues_symmetric(&symmetrize(&g))?;
    let table = ChebyshevTable::new(tail);

    let mut max_residual: f64 = 0.0;
    let mut eigenvalues = Vec::with_capacity(tail);
    for l in 1..=tail {
        let lambda = ((2 * l - 1) as f64 * std::f64::consts::PI / (2 * tail) as f64).cos();
        let mut f = vec![0.0; n];
        for j in 1..=tail {
            let value = table.eval(j as i64 - 1, lambda);
            f[k + j - 1] = value;
            f[k + tail + j - 1] = -value;
        }
        let residual = (0..n)
            .map(|a| {
                let tf: f64 = g.neighbors(a).iter().map(|&b| f[b]).sum::<f64>() / g.degree(a) as f64;
                (tf - lambda * f[a]).abs()
            })
            .fold(0.0, f64::max);
        if residual > tol {
            return Err(ChebyshevError::ResidualExceeded { l, residual });
        }
        if !spectrum.contains(lambda, tol) {
            return Err(ChebyshevError::MissingEigenvalue { l, lambda });
        }
        max_residual = max_residual.max(residual);
        eigenvalues.push(lambda);
    }
    Ok(ChebyshevReport { max_residual, eigenvalues })
}
