//! Weighted matching sums and the identities relating them to the
//! characteristic polynomial of `T` on odd-unicyclic graphs.
//!
//! Notation follows the two-branch setting: `u` is the degree-4 cycle vertex,
//! `v_1, v_2, ...` and `w_1, w_2, ...` walk down its two tree branches,
//! `g_i = v_{i-1} v_i` and `h_i = w_{i-1} w_i` with `v_0 = w_0 = u`. `G'` is
//! the cycle plus `g_1, h_1`, and `E(T)` is every other edge.

use serde::Serialize;
use thiserror::Error;

use super::{degree_condition_filter, DegreeCondition};
use crate::graph::{classify, enumerate_matchings, Edge, Graph, UnicycleDecomposition};
use crate::linalg::{charpoly_exact, CharPoly, LinalgError, RationalScalar};
use crate::walk::build_transition_matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("index {index} out of range (at most {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("graph does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// `M(e) = 1/(deg a * deg b)` for `e = ab`.
pub fn edge_weight(g: &Graph, e: Edge) -> RationalScalar {
    debug_assert!(g.has_edge(e.0, e.1), "{e} is not an edge");
    RationalScalar::new(1, (g.degree(e.0) * g.degree(e.1)) as i64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatchingSum {
    pub value: RationalScalar,
    pub t: usize,
    /// Graph edges left out of the sum.
    pub excluded_edges: Vec<Edge>,
    pub forbidden_vertices: Vec<usize>,
}

/// Sum over `t`-matchings drawn from `allowed` (all edges when `None`) and
/// avoiding `forbidden_vertices` of the product of edge weights.
pub fn matching_sum(g: &Graph, t: usize, allowed: Option<&[Edge]>, forbidden_vertices: Option<&[usize]>) -> MatchingSum {
    let value = enumerate_matchings(g, t, allowed, forbidden_vertices)
        .map(|m| m.edges.iter().fold(RationalScalar::one(), |acc, &e| acc * edge_weight(g, e)))
        .sum();
    MatchingSum {
        value,
        t,
        excluded_edges: match allowed {
            Some(a) => g.edges().iter().copied().filter(|e| !a.contains(e)).collect(),
            None => Vec::new(),
        },
        forbidden_vertices: forbidden_vertices.map(<[usize]>::to_vec).unwrap_or_default(),
    }
}

fn sum_over(g: &Graph, t: usize, allowed: &[Edge]) -> RationalScalar {
    matching_sum(g, t, Some(allowed), None).value
}

fn transition_charpoly(g: &Graph) -> Result<CharPoly, IdentityError> {
    Ok(charpoly_exact(&build_transition_matrix(g).matrix)?)
}

/// Checks `rho_{n-k-2t} = (-1)^(t+1) * 2 * prod_cycle 1/deg * S_t`, where `S_t`
/// sums over `t`-matchings of the edges with no endpoint on the cycle.
pub fn rho_matching_identity_check(g: &Graph, d: &UnicycleDecomposition, t: usize) -> Result<bool, IdentityError> {
    let n = g.vertex_count();
    let limit = (n - d.girth) / 2;
    if t > limit {
        return Err(IdentityError::IndexOutOfRange { index: t, limit });
    }
    let cp = transition_charpoly(g)?;
    let cycle_weight = d
        .cycle
        .iter()
        .fold(RationalScalar::one(), |acc, &v| acc * RationalScalar::new(1, g.degree(v) as i64));
    let off_cycle: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !d.on_cycle(e.0) && !d.on_cycle(e.1))
        .collect();
    let sum = matching_sum(g, t, Some(&off_cycle), Some(&d.cycle)).value;
    let sign = if t.is_multiple_of(2) { -2 } else { 2 };
    let rhs = RationalScalar::from_integer(sign) * cycle_weight * sum;
    Ok(cp.coeff_from_top(d.girth + 2 * t) == &rhs)
}

/// The two tree branches hanging off the degree-4 cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeBranches {
    pub u: usize,
    /// `v_1, v_2, ...`, continued while the current vertex has degree 2.
    pub v: Vec<usize>,
    pub w: Vec<usize>,
    /// `g_1, g_2, ...` aligned with `v`.
    pub g_edges: Vec<Edge>,
    pub h_edges: Vec<Edge>,
    /// `E(G')`.
    pub prime_edges: Vec<Edge>,
    /// `E(T) = E(G) \ E(G')`.
    pub tree_edges: Vec<Edge>,
}

fn walk_branch(g: &Graph, u: usize, first: usize) -> Vec<usize> {
    let mut chain = vec![first];
    let mut prev = u;
    while g.degree(*chain.last().unwrap()) == 2 {
        let cur = *chain.last().unwrap();
        let next = g.neighbors(cur).iter().copied().find(|&x| x != prev).unwrap();
        prev = cur;
        chain.push(next);
    }
    chain
}

fn chain_edges(u: usize, chain: &[usize]) -> Vec<Edge> {
    std::iter::once(u)
        .chain(chain.iter().copied())
        .zip(chain.iter().copied())
        .map(|(a, b)| Edge::new(a, b))
        .collect()
}

impl TreeBranches {
    /// Requires an odd-unicyclic graph whose cycle carries one degree-4 vertex
    /// and otherwise degree 2. `v_1` is the smaller of its two tree neighbours.
    pub fn from_graph(g: &Graph) -> Result<TreeBranches, IdentityError> {
        let class = classify(g);
        let d = class
            .decomposition()
            .ok_or_else(|| IdentityError::ShapeMismatch(format!("graph is {}, not odd-unicyclic", class.name())))?;
        let DegreeCondition::OneDegreeFour(u) = degree_condition_filter(d, g) else {
            return Err(IdentityError::ShapeMismatch("cycle does not carry exactly one degree-4 vertex".into()));
        };
        let tree_nb: Vec<usize> = g.neighbors(u).iter().copied().filter(|&x| !d.on_cycle(x)).collect();
        let (v1, w1) = (tree_nb[0].min(tree_nb[1]), tree_nb[0].max(tree_nb[1]));
        let v = walk_branch(g, u, v1);
        let w = walk_branch(g, u, w1);
        let g_edges = chain_edges(u, &v);
        let h_edges = chain_edges(u, &w);
        let mut prime_edges = d.cycle_edges();
        prime_edges.extend([g_edges[0], h_edges[0]]);
        prime_edges.sort_unstable();
        let tree_edges = g.edges().iter().copied().filter(|e| !prime_edges.contains(e)).collect();
        Ok(TreeBranches {
            u,
            v,
            w,
            g_edges,
            h_edges,
            prime_edges,
            tree_edges,
        })
    }

    /// Largest `t` with `v_1..v_t` and `w_1..w_t` all of degree 2.
    pub fn degree_two_depth(&self, g: &Graph) -> usize {
        let run = |c: &[usize]| c.iter().take_while(|&&x| g.degree(x) == 2).count();
        run(&self.v).min(run(&self.w))
    }

    /// `K_{2i}`.
    pub fn k(&self, g: &Graph, i: usize) -> RationalScalar {
        sum_over(g, i, &self.tree_edges)
    }

    /// `L_{2i}(2, ..., upto)`; zero for negative `i`. Needs `g_upto`, `h_upto`.
    pub fn l(&self, g: &Graph, i: i64, upto: usize) -> RationalScalar {
        if i < 0 {
            return RationalScalar::zero();
        }
        let without = |chain: &[Edge]| -> Vec<Edge> {
            let drop = &chain[1.min(chain.len())..upto.min(chain.len())];
            self.tree_edges.iter().copied().filter(|e| !drop.contains(e)).collect()
        };
        sum_over(g, i as usize, &without(&self.g_edges)) + sum_over(g, i as usize, &without(&self.h_edges))
    }
}

/// Checks `L_{2i}(2..r) = 2 K_{2i} - sum_{j=2..r} L_{2(i-1)}(2..j+1) / 4`.
///
/// The derivation splits off the edge `g_j` (resp. `h_j`) with weight 1/4,
/// which needs `v_1..v_r` and `w_1..w_r` to have degree 2.
pub fn k_l_recurrence_check(g: &Graph, i: usize, r: usize) -> Result<bool, IdentityError> {
    let b = TreeBranches::from_graph(g)?;
    let depth = b.degree_two_depth(g);
    if r > depth {
        return Err(IdentityError::ShapeMismatch(format!(
            "need v_1..v_{r} and w_1..w_{r} of degree 2, only {depth} available"
        )));
    }
    let lhs = b.l(g, i as i64, r);
    let quarter = RationalScalar::new(1, 4);
    let correction: RationalScalar = (2..=r).map(|j| &quarter * &b.l(g, i as i64 - 1, j + 1)).sum();
    let rhs = RationalScalar::from_integer(2) * b.k(g, i) - correction;
    Ok(lhs == rhs)
}

/// Checks `K_{2t} = (-1)^t rho_{n-2t} - X_t`, with `X_t` summed directly over
/// the `t`-matchings of `G` that use at least one edge of `G'`.
pub fn kt_decomposition_check(g: &Graph, t: usize) -> Result<bool, IdentityError> {
    let b = TreeBranches::from_graph(g)?;
    let limit = g.vertex_count() / 2;
    if t > limit {
        return Err(IdentityError::IndexOutOfRange { index: t, limit });
    }
    let cp = transition_charpoly(g)?;
    let x_t: RationalScalar = enumerate_matchings(g, t, None, None)
        .filter(|m| m.edges.iter().any(|e| b.prime_edges.contains(e)))
        .map(|m| m.edges.iter().fold(RationalScalar::one(), |acc, &e| acc * edge_weight(g, e)))
        .sum();
    let rho = cp.coeff_from_top(2 * t);
    let signed = if t.is_multiple_of(2) { rho.clone() } else { -rho };
    Ok(b.k(g, t) == signed - x_t)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntegralityInstance {
    pub i: usize,
    /// `2^{2i} K_{2i}`.
    pub k_scaled: RationalScalar,
    /// `2^{2(i-1)-1} L_{2(i-1)}(2)`.
    pub l_scaled: RationalScalar,
}

impl IntegralityInstance {
    pub fn holds(&self) -> bool {
        self.k_scaled.is_integer() && self.l_scaled.is_integer()
    }
}

/// The scaled `K` and `L` values for `1 <= i <= t`, `t` the degree-2 depth of
/// both branches.
pub fn main_theorem_integralities(g: &Graph) -> Result<Vec<IntegralityInstance>, IdentityError> {
    let b = TreeBranches::from_graph(g)?;
    Ok((1..=b.degree_two_depth(g))
        .map(|i| IntegralityInstance {
            i,
            k_scaled: b.k(g, i).mul_pow2(2 * i as i64),
            l_scaled: b.l(g, i as i64 - 1, 2).mul_pow2(2 * (i as i64 - 1) - 1),
        })
        .collect())
}
