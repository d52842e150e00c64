use serde::Serialize;

use super::LinalgError;

/// Dense row-major matrix of doubles.
#[derive(Debug, Clone, PartialEq)]
pub struct RealMatrix {
    n_rows: usize,
    n_cols: usize,
    data: Vec<f64>,
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RealMatrix {
            n_rows: rows,
            n_cols: cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_diagonal(d: &[f64]) -> Self {
        Self::from_fn(d.len(), d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.n_rows
    }

    pub fn cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n_cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.n_cols + j] = v;
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| self.get(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.n_rows.min(self.n_cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.n_cols);
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.n_rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.n_rows == self.n_cols
            && (0..self.n_rows).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                if i != j {
                    s += self.get(i, j) * self.get(i, j);
                }
            }
        }
        s.sqrt()
    }

    fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Real spectrum of a symmetric matrix, ascending, with clustered
/// multiplicities. Multiplicities always add up to the dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<Eigenvalue>,
}

/// Eigenvalues closer than this are reported as one value with multiplicity.
pub const MULTIPLICITY_TOL: f64 = 1e-9;

impl Spectrum {
    pub fn from_sorted(values: &[f64]) -> Self {
        let mut eigenvalues: Vec<Eigenvalue> = Vec::new();
        let mut start = 0;
        for i in 0..values.len() {
            let next_apart = i + 1 == values.len() || values[i + 1] - values[i] > MULTIPLICITY_TOL;
            if next_apart {
                let cluster = &values[start..=i];
                eigenvalues.push(Eigenvalue {
                    value: cluster.iter().sum::<f64>() / cluster.len() as f64,
                    multiplicity: cluster.len(),
                });
                start = i + 1;
            }
        }
        Spectrum { eigenvalues }
    }

    pub fn dimension(&self) -> usize {
        self.eigenvalues.iter().map(|e| e.multiplicity).sum()
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn values(&self) -> Vec<f64> {
        self.eigenvalues
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.eigenvalues.iter().any(|e| (e.value - x).abs() <= tol)
    }
}

/// Eigen-decomposition `S = V diag(values) V^T`, values ascending and the
/// columns of `vectors` matching them.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: RealMatrix,
}

pub const SYMMETRY_TOL: f64 = 1e-12;
pub const OFF_DIAGONAL_TOL: f64 = 1e-14;
pub const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// `1e-14` (relative to the matrix norm when that exceeds one).
pub fn eigen_symmetric(s: &RealMatrix) -> Result<SymmetricEigen, LinalgError> {
    if !s.is_symmetric(SYMMETRY_TOL) {
        return Err(LinalgError::NotSymmetric);
    }
    let n = s.rows();
    let mut a = s.clone();
    // symmetrize exactly so rotations see a consistent matrix
    for i in 0..n {
        for j in 0..i {
            let avg = 0.5 * (a.get(i, j) + a.get(j, i));
            a.set(i, j, avg);
            a.set(j, i, avg);
        }
    }
    let mut v = RealMatrix::from_fn(n, n, |i, j| if i == j { 1.0 } else { 0.0 });
    let threshold = OFF_DIAGONAL_TOL * s.frobenius_norm().max(1.0);

    let mut converged = a.off_diagonal_norm() <= threshold;
    let mut sweeps = 0;
    while !converged {
        if sweeps == MAX_SWEEPS {
            return Err(LinalgError::NoConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let app = a.get(p, p);
                let aqq = a.get(q, q);
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a.get(k, p);
                    let akq = a.get(k, q);
                    a.set(k, p, c * akp - sn * akq);
                    a.set(k, q, sn * akp + c * akq);
                }
                for k in 0..n {
                    let apk = a.get(p, k);
                    let aqk = a.get(q, k);
                    a.set(p, k, c * apk - sn * aqk);
                    a.set(q, k, sn * apk + c * aqk);
                }
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);
                for k in 0..n {
                    let vkp = v.get(k, p);
                    let vkq = v.get(k, q);
                    v.set(k, p, c * vkp - sn * vkq);
                    v.set(k, q, sn * vkp + c * vkq);
                }
            }
        }
        converged = a.off_diagonal_norm() <= threshold;
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a.get(i, i).total_cmp(&a.get(j, j)));
    let values = order.iter().map(|&i| a.get(i, i)).collect();
    let vectors = RealMatrix::from_fn(n, n, |i, j| v.get(i, order[j]));
    Ok(SymmetricEigen { values, vectors })
}

pub fn eigenvalues_symmetric(s: &RealMatrix) -> Result<Spectrum, LinalgError> {
    Ok(Spectrum::from_sorted(&eigen_symmetric(s)?.values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let s = RealMatrix::from_diagonal(&[3.0, 1.0, 2.0]);
        let sp = eigenvalues_symmetric(&s).unwrap();
        assert_eq!(sp.values(), vec![1.0, 2.0, 3.0]);
    }

    #[test]
    fn triangle_transition() {
        let s = RealMatrix::from_fn(3, 3, |i, j| if i == j { 0.0 } else { 0.5 });
        let sp = eigenvalues_symmetric(&s).unwrap();
        assert_eq!(sp.eigenvalues.len(), 2);
        assert!((sp.eigenvalues[0].value + 0.5).abs() < 1e-10);
        assert_eq!(sp.eigenvalues[0].multiplicity, 2);
        assert!((sp.eigenvalues[1].value - 1.0).abs() < 1e-10);
    }

    #[test]
    fn non_symmetric_rejected() {
        let s = RealMatrix::from_fn(2, 2, |i, j| if i < j { 1.0 } else { 0.0 });
        assert!(matches!(eigenvalues_symmetric(&s), Err(LinalgError::NotSymmetric)));
        assert!(matches!(eigenvalues_symmetric(&RealMatrix::zeros(2, 3)), Err(LinalgError::NotSymmetric)));
    }

    #[test]
    fn eigenpairs_have_small_residuals() {
        let s = RealMatrix::from_fn(6, 6, |i, j| 1.0 / (1.0 + i as f64 + j as f64));
        let eig = eigen_symmetric(&s).unwrap();
        let scale = s.norm_inf();
        for (j, &lambda) in eig.values.iter().enumerate() {
            let v = eig.vectors.column(j);
            let sv = s.mul_vec(&v);
            let r = sv.iter().zip(&v).map(|(a, b)| (a - lambda * b).abs()).fold(0.0, f64::max);
            assert!(r <= 1e-10 * scale, "residual {r}");
        }
        let total: f64 = eig.values.iter().sum();
        assert!((total - s.trace()).abs() < 1e-9);
    }
}
