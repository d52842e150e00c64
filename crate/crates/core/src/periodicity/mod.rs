//! Periodicity of the Grover walk: necessary-condition filters, exact period
//! search, matching-sum identities and the Chebyshev eigenvector construction.

mod chebyshev;
mod detect;
mod identities;

pub use chebyshev::{chebyshev_eigen_check, ChebyshevError, ChebyshevReport, ChebyshevTable};
pub use detect::{rational_angle, root_of_unity_order};
pub use identities::{
    edge_weight, k_l_recurrence_check, kt_decomposition_check, main_theorem_integralities, matching_sum,
    rho_matching_identity_check, IdentityError, IntegralityInstance, MatchingSum, TreeBranches,
};

use num_integer::Integer;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::io::format_graph;
use crate::graph::{Graph, UnicycleDecomposition};
use crate::linalg::{charpoly_exact, eigenvalues_symmetric, CharPoly, LinalgError, RationalMatrix};
use crate::walk::{build_grover_operator, build_transition_matrix, symmetrize};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PeriodError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("exact powers of U exceeded the bit budget ({bits} > {budget} bits) at exponent {exponent}")]
    BudgetExceeded { bits: u64, budget: u64, exponent: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeriodConfig {
    pub k_max: u64,
    /// Slack on `|cos(pi p/q) - lambda|` when matching eigenvalues to angles.
    pub tol: f64,
    pub q_max: u64,
    /// Cap on the total numerator plus denominator bits of any power of `U`.
    pub bit_budget: u64,
    /// Spectral candidates above this are not trusted and fall through to the
    /// exhaustive stage.
    pub candidate_cap: u64,
}

impl Default for PeriodConfig {
    fn default() -> Self {
        PeriodConfig {
            k_max: 10_000,
            tol: 1e-12,
            q_max: 512,
            bit_budget: 1_000_000,
            candidate_cap: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    Periodic { period: u64 },
    /// Indices `j` with `2^j rho_{n-j}` not an integer.
    RefutedByIntegrality { failing: Vec<usize> },
    NoPeriodUpTo { k_max: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidateSource {
    Spectral,
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PeriodReport {
    pub verdict: Verdict,
    /// Which stage produced the verdict; absent when the integrality filter
    /// decided it.
    pub candidate_source: Option<CandidateSource>,
    /// Hex SHA-256 of the graph file text.
    pub graph_hash: String,
}

impl PeriodReport {
    pub fn period(&self) -> Option<u64> {
        match self.verdict {
            Verdict::Periodic { period } => Some(period),
            _ => None,
        }
    }
}

pub fn graph_hash(g: &Graph) -> String {
    Sha256::digest(format_graph(g).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Every `j` in `0..=n` for which `2^j rho_{n-j}` is not an integer. Empty
/// means the polynomial passes.
pub fn integrality_filter(cp: &CharPoly) -> Vec<usize> {
    (0..=cp.degree())
        .filter(|&j| !cp.coeff_from_top(j).mul_pow2(j as i64).is_integer())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vertex", rename_all = "snake_case")]
pub enum DegreeCondition {
    AllDegreeTwo,
    OneDegreeFour(usize),
    Violates,
}

/// Degree pattern on the cycle of an odd-unicyclic graph.
pub fn degree_condition_filter(d: &UnicycleDecomposition, g: &Graph) -> DegreeCondition {
    let mut four = None;
    for &v in &d.cycle {
        match g.degree(v) {
            2 => {}
            4 if four.is_none() => four = Some(v),
            _ => return DegreeCondition::Violates,
        }
    }
    four.map_or(DegreeCondition::AllDegreeTwo, DegreeCondition::OneDegreeFour)
}

fn check_budget(m: &RationalMatrix, budget: u64, exponent: u64) -> Result<(), PeriodError> {
    let bits = m.bit_size();
    if bits > budget {
        return Err(PeriodError::BudgetExceeded { bits, budget, exponent });
    }
    Ok(())
}

/// Smallest `d` in `1..=limit` with `U^d = I`, by incremental multiplication.
fn first_identity_power(u: &RationalMatrix, limit: u64, budget: u64) -> Result<Option<u64>, PeriodError> {
    let mut p = u.clone();
    for d in 1..=limit {
        if d > 1 {
            p = p.mul(u)?;
            check_budget(&p, budget, d)?;
        }
        if p.is_identity() {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// lcm of the orders of `exp(+-i arccos lambda)` over `Spec(T)`, or `None` when
/// some eigenvalue has no angle `pi p/q` with `q <= q_max` within `tol`.
fn spectral_candidate(g: &Graph, config: &PeriodConfig) -> Result<Option<u64>, PeriodError> {
    let spectrum = eigenvalues_symmetric(&symmetrize(g))?;
    let mut k: u64 = 1;
    for ev in &spectrum.eigenvalues {
        let Some((p, q)) = rational_angle(ev.value, config.tol, config.q_max) else {
            return Ok(None);
        };
        k = k.lcm(&root_of_unity_order(p, q));
        if k > config.candidate_cap {
            return Ok(None);
        }
    }
    Ok(Some(k))
}

/// Decides periodicity with exact certificates.
///
/// The integrality filter runs first and refutes most graphs outright. Then a
/// candidate period is read off the numeric spectrum of `T`; it is confirmed
/// by exact powering and a full minimality scan. The candidate is retried
/// doubled, since the extra `-1` eigenvalues of `U` are invisible in
/// `Spec(T)`. If no candidate survives, `U^d = I` is tested for every `d` up to
/// `k_max`.
pub fn find_period(g: &Graph, config: &PeriodConfig) -> Result<PeriodReport, PeriodError> {
    let graph_hash = graph_hash(g);
    let cp_t = charpoly_exact(&build_transition_matrix(g).matrix)?;
    let failing = integrality_filter(&cp_t);
    if !failing.is_empty() {
        return Ok(PeriodReport {
            verdict: Verdict::RefutedByIntegrality { failing },
            candidate_source: None,
            graph_hash,
        });
    }

    let u = build_grover_operator(g).matrix;
    if let Some(k) = spectral_candidate(g, config)? {
        let mut tries = vec![k];
        if k % 2 == 1 && 2 * k <= config.candidate_cap {
            tries.push(2 * k);
        }
        for k in tries {
            let power = u.pow(k)?;
            check_budget(&power, config.bit_budget, k)?;
            if power.is_identity() {
                let period = first_identity_power(&u, k, config.bit_budget)?.unwrap_or(k);
                return Ok(PeriodReport {
                    verdict: Verdict::Periodic { period },
                    candidate_source: Some(CandidateSource::Spectral),
                    graph_hash,
                });
            }
        }
    }

    let verdict = match first_identity_power(&u, config.k_max, config.bit_budget)? {
        Some(period) => Verdict::Periodic { period },
        None => Verdict::NoPeriodUpTo { k_max: config.k_max },
    };
    Ok(PeriodReport {
        verdict,
        candidate_source: Some(CandidateSource::Exhaustive),
        graph_hash,
    })
}

/// True iff the graph has an odd period.
pub fn odd_period_query(g: &Graph, config: &PeriodConfig) -> Result<bool, PeriodError> {
    Ok(find_period(g, config)?.period().is_some_and(|p| p % 2 == 1))
}
