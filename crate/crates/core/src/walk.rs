//! Grover evolution on arcs, the isotropic transition matrix, and a numeric
//! check that the spectrum of the former is the image of the latter under
//! `lambda -> exp(+-i arccos lambda)` plus eigenvalues at `+1` and `-1`.

use num_complex::Complex64;
use serde::Serialize;

use crate::graph::{Arc, Graph};
use crate::linalg::{charpoly_exact, eigenvalues_symmetric, CharPoly, LinalgError, RationalMatrix, RationalScalar, RealMatrix};

/// `U` indexed by the canonical arc order of the source graph.
#[derive(Debug, Clone)]
pub struct GroverOperator {
    pub matrix: RationalMatrix,
    pub arcs: Vec<Arc>,
}

impl GroverOperator {
    pub fn dimension(&self) -> usize {
        self.arcs.len()
    }
}

/// Row-stochastic `T` with `T[u][v] = 1/deg(u)` for adjacent `u, v`.
#[derive(Debug, Clone)]
pub struct TransitionMatrix {
    pub matrix: RationalMatrix,
}

/// `U[e][f] = 2/deg(t(f)) - [e = reverse(f)]` when `t(f) = o(e)`, else 0.
pub fn build_grover_operator(g: &Graph) -> GroverOperator {
    let arcs = g.arcs();
    let mut u = RationalMatrix::zeros(arcs.len(), arcs.len());
    for (fi, f) in arcs.iter().enumerate() {
        let v = f.terminus;
        let transmit = RationalScalar::new(2, g.degree(v) as i64);
        for &w in g.neighbors(v) {
            let e = Arc { origin: v, terminus: w };
            let ei = g.arc_index(e).expect("neighbour arcs exist");
            let entry = if e == f.reversed() {
                &transmit - &RationalScalar::one()
            } else {
                transmit.clone()
            };
            u.set(ei, fi, entry);
        }
    }
    GroverOperator { matrix: u, arcs }
}

pub fn build_transition_matrix(g: &Graph) -> TransitionMatrix {
    let n = g.vertex_count();
    let mut t = RationalMatrix::zeros(n, n);
    for u in 0..n {
        let w = RationalScalar::new(1, g.degree(u) as i64);
        for &v in g.neighbors(u) {
            t.set(u, v, w.clone());
        }
    }
    TransitionMatrix { matrix: t }
}

/// `D^{1/2} T D^{-1/2}`, entries `[u~v] / sqrt(deg u * deg v)`. Same spectrum
/// as `T`, but symmetric.
pub fn symmetrize(g: &Graph) -> RealMatrix {
    let n = g.vertex_count();
    let deg = g.degrees();
    RealMatrix::from_fn(n, n, |u, v| {
        if g.has_edge(u, v) {
            1.0 / ((deg[u] * deg[v]) as f64).sqrt()
        } else {
            0.0
        }
    })
}

/// Numeric spectrum of `T(g)` via the symmetrized matrix.
pub fn transition_spectrum(g: &Graph) -> Result<Vec<f64>, LinalgError> {
    Ok(eigenvalues_symmetric(&symmetrize(g))?.values())
}

/// Clamp slack applied before `arccos`.
pub const ARCCOS_CLAMP_TOL: f64 = 1e-12;

/// `arccos` that tolerates rounding just outside `[-1, 1]`.
pub fn clamped_arccos(lambda: f64) -> f64 {
    let x = if (1.0..=1.0 + ARCCOS_CLAMP_TOL).contains(&lambda) {
        1.0
    } else if (-1.0 - ARCCOS_CLAMP_TOL..-1.0).contains(&lambda) {
        -1.0
    } else {
        lambda
    };
    x.acos()
}

#[derive(Debug, Clone, Serialize)]
pub struct PredictedRoot {
    pub re: f64,
    pub im: f64,
    /// `|charpoly_U(z)|`.
    pub residual: f64,
    pub source_eigenvalue: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralMapReport {
    pub matched: bool,
    pub dimension: usize,
    pub predicted: usize,
    pub max_residual: f64,
    /// Roots of `charpoly_U` at `+1` / `-1` beyond the predicted ones.
    pub unexplained_plus_one: usize,
    pub unexplained_minus_one: usize,
    pub residual_pairs: Vec<PredictedRoot>,
}

fn near(x: f64, target: f64, tol: f64) -> bool {
    (x - target).abs() <= tol
}

/// Predicts `Spec(U)` from `Spec(T)` and checks every prediction against the
/// exact characteristic polynomial of `U`.
///
/// The `+1`/`-1` parts are handled exactly: their multiplicities are read off
/// `charpoly_U` by synthetic division, and whatever is left after removing the
/// predicted `+-1` values must account for every root not predicted.
pub fn spectral_map_check(g: &Graph, tol: f64) -> Result<SpectralMapReport, LinalgError> {
    let u = build_grover_operator(g);
    let cp = charpoly_exact(&u.matrix)?;
    spectral_map_check_with(g, &cp, tol)
}

pub fn spectral_map_check_with(g: &Graph, charpoly_u: &CharPoly, tol: f64) -> Result<SpectralMapReport, LinalgError> {
    let spec_t = transition_spectrum(g)?;
    let dimension = charpoly_u.degree();

    let mut residual_pairs = Vec::new();
    let mut predicted_plus = 0;
    let mut predicted_minus = 0;
    for &lambda in &spec_t {
        let theta = clamped_arccos(lambda);
        if near(lambda, 1.0, tol) {
            predicted_plus += 1;
        } else if near(lambda, -1.0, tol) {
            predicted_minus += 1;
        }
        // arccos is ill-conditioned at +-1, so those eigenvalues map straight
        // to the real root instead of going through the angle
        let roots: Vec<Complex64> = if near(lambda, 1.0, tol) {
            vec![Complex64::new(1.0, 0.0)]
        } else if near(lambda, -1.0, tol) {
            vec![Complex64::new(-1.0, 0.0)]
        } else {
            vec![Complex64::from_polar(1.0, theta), Complex64::from_polar(1.0, -theta)]
        };
        for z in roots {
            residual_pairs.push(PredictedRoot {
                re: z.re,
                im: z.im,
                residual: charpoly_u.eval_complex(z).norm(),
                source_eigenvalue: lambda,
            });
        }
    }

    let predicted = residual_pairs.len();
    let max_residual = residual_pairs.iter().map(|p| p.residual).fold(0.0, f64::max);
    let mult_plus = charpoly_u.root_multiplicity(&RationalScalar::one());
    let mult_minus = charpoly_u.root_multiplicity(&RationalScalar::from_integer(-1));
    let unexplained_plus_one = mult_plus.saturating_sub(predicted_plus);
    let unexplained_minus_one = mult_minus.saturating_sub(predicted_minus);
    let counts_ok = mult_plus >= predicted_plus
        && mult_minus >= predicted_minus
        && predicted <= dimension
        && unexplained_plus_one + unexplained_minus_one == dimension - predicted;

    Ok(SpectralMapReport {
        matched: counts_ok && residual_pairs.iter().all(|p| p.residual <= tol),
        dimension,
        predicted,
        max_residual,
        unexplained_plus_one,
        unexplained_minus_one,
        residual_pairs,
    })
}
