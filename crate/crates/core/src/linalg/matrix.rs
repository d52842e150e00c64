use std::fmt;

use super::{LinalgError, RationalScalar};

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalScalar>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![RationalScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = RationalScalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalScalar>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::DimensionMismatch {
                left: (r, c),
                right: (r, c),
            });
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RationalScalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[RationalScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> RationalScalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<RationalScalar> {
        (0..self.rows).map(|i| self.row(i).iter().sum()).collect()
    }

    /// Early-exits on the first entry that differs from the identity.
    pub fn is_identity(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|i| self.get(i, i).is_one())
            && (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Total bits over all numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        self.data.iter().map(RationalScalar::bit_size).sum()
    }

    pub fn add_scaled_identity(&mut self, c: &RationalScalar) {
        assert!(self.is_square());
        for i in 0..self.rows {
            let idx = i * self.cols + i;
            self.data[idx] += c;
        }
    }

    pub fn scale(&self, c: &RationalScalar) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn to_f64(&self) -> super::RealMatrix {
        super::RealMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).to_f64())
    }

    /// Simultaneous relabeling of rows and columns: entry `(i, j)` moves to
    /// `(perm[i], perm[j])`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(perm[i], perm[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// Exact product. Zero entries of both factors are skipped, so multiplying
    /// by a sparse operator such as a Grover matrix costs `rows * nnz(b)`.
    #[allow(clippy::needless_range_loop)]
    pub fn mul(&self, b: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
        if self.cols != b.rows {
            return Err(LinalgError::DimensionMismatch {
                left: (self.rows, self.cols),
                right: (b.rows, b.cols),
            });
        }
        let b_nonzero: Vec<Vec<usize>> = (0..b.rows)
            .map(|k| (0..b.cols).filter(|&j| !b.get(k, j).is_zero()).collect())
            .collect();
        let mut out = RationalMatrix::zeros(self.rows, b.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a_ik = self.get(i, k);
                if a_ik.is_zero() {
                    continue;
                }
                for &j in &b_nonzero[k] {
                    let term = a_ik * b.get(k, j);
                    out.data[i * b.cols + j] += &term;
                }
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring; `self^0` is the identity.
    pub fn pow(&self, mut k: u64) -> Result<RationalMatrix, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut result = RationalMatrix::identity(self.rows);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn mat_mul(a: &RationalMatrix, b: &RationalMatrix) -> Result<RationalMatrix, LinalgError> {
    a.mul(b)
}

pub fn mat_pow(a: &RationalMatrix, k: u64) -> Result<RationalMatrix, LinalgError> {
    a.pow(k)
}
