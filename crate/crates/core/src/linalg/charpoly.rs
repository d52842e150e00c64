use num_complex::Complex64;
use serde::Serialize;

use super::{LinalgError, RationalMatrix, RationalScalar};

/// Monic characteristic polynomial `det(xI - M) = sum_j coeffs[j] x^j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CharPoly {
    /// Ascending: `coeffs[j]` multiplies `x^j`; the last entry is 1.
    coeffs: Vec<RationalScalar>,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<RationalScalar>) -> Self {
        assert!(coeffs.last().is_some_and(RationalScalar::is_one), "characteristic polynomial must be monic");
        CharPoly { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RationalScalar] {
        &self.coeffs
    }

    /// Coefficient of `x^j`.
    pub fn coeff(&self, j: usize) -> &RationalScalar {
        &self.coeffs[j]
    }

    /// Coefficient of `x^(n-j)`, i.e. the one collecting permutations that
    /// move exactly `j` points.
    pub fn coeff_from_top(&self, j: usize) -> &RationalScalar {
        &self.coeffs[self.degree() - j]
    }

    pub fn eval(&self, x: &RationalScalar) -> RationalScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(RationalScalar::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c.to_f64())
    }

    /// Multiplicity of the rational root `r`, by exact synthetic division.
    pub fn root_multiplicity(&self, r: &RationalScalar) -> usize {
        let mut poly = self.coeffs.clone();
        let mut mult = 0;
        while poly.len() > 1 {
            // divide by (x - r): descending Horner, remainder is the final value
            let mut quotient = vec![RationalScalar::zero(); poly.len() - 1];
            let mut acc = RationalScalar::zero();
            for j in (0..poly.len()).rev() {
                acc = acc * r + &poly[j];
                if j > 0 {
                    quotient[j - 1] = acc.clone();
                }
            }
            if !acc.is_zero() {
                break;
            }
            mult += 1;
            poly = quotient;
        }
        mult
    }
}

/// Faddeev–LeVerrier recurrence over the rationals:
/// `M_k = A M_{k-1} + c_{n-k+1} I`, `c_{n-k} = -tr(A M_k) / k`.
pub fn charpoly_exact(a: &RationalMatrix) -> Result<CharPoly, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NonSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = a.rows();
    let mut coeffs = vec![RationalScalar::zero(); n + 1];
    coeffs[n] = RationalScalar::one();
    let mut a_m = RationalMatrix::zeros(n, n);
    for k in 1..=n {
        let mut m = a_m;
        m.add_scaled_identity(&coeffs[n - k + 1]);
        a_m = a.mul(&m)?;
        coeffs[n - k] = -(a_m.trace() / RationalScalar::from_integer(k as i64));
    }
    Ok(CharPoly { coeffs })
}
