//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use grover_core::families::{enumerate_connected, enumerate_odd_unicyclic, make_family, FamilySpec};
use grover_core::graph::{Edge, Graph};
use grover_core::linalg::{CharPoly, RationalMatrix, RationalScalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Fraction-free Bareiss determinant of an integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `det(xI - A)` by Bareiss at `x = 0..=n` on the denominator-cleared matrix,
/// then Lagrange interpolation.
pub fn charpoly_by_interpolation(a: &RationalMatrix) -> CharPoly {
    let n = a.rows();
    let mut l = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            l = l.lcm(a.get(i, j).denom());
        }
    }
    let scale = RationalScalar::from_bigints(l.clone(), BigInt::one());
    let values: Vec<RationalScalar> = (0..=n)
        .map(|x| {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let diag = if i == j { RationalScalar::from_integer(x as i64) } else { RationalScalar::zero() };
                            let e = (diag - a.get(i, j)) * &scale;
                            assert!(e.is_integer());
                            e.numer().clone()
                        })
                        .collect()
                })
                .collect();
            RationalScalar::from_bigints(bareiss_det(m), l.pow(n as u32))
        })
        .collect();

    // Lagrange basis polynomials, ascending coefficients
    let mut coeffs = vec![RationalScalar::zero(); n + 1];
    for (xi, yi) in values.iter().enumerate() {
        let mut basis = vec![RationalScalar::one()];
        let mut denom = RationalScalar::one();
        for xj in 0..=n {
            if xj == xi {
                continue;
            }
            let mut next = vec![RationalScalar::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= &(c * &RationalScalar::from_integer(xj as i64));
            }
            basis = next;
            denom *= &RationalScalar::from_integer(xi as i64 - xj as i64);
        }
        let factor = yi / &denom;
        for (d, c) in basis.iter().enumerate() {
            coeffs[d] += &(c * &factor);
        }
    }
    CharPoly::from_coeffs(coeffs)
}

/// Every `t`-subset of edges that is pairwise disjoint.
pub fn brute_force_matchings(g: &Graph, t: usize) -> Vec<Vec<Edge>> {
    let edges = g.edges();
    let m = edges.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        if mask.count_ones() as usize != t {
            continue;
        }
        let chosen: Vec<Edge> = (0..m).filter(|&i| mask & (1 << i) != 0).map(|i| edges[i]).collect();
        let mut seen = vec![false; g.vertex_count()];
        let disjoint = chosen.iter().all(|e| {
            let fresh = !seen[e.0] && !seen[e.1];
            seen[e.0] = true;
            seen[e.1] = true;
            fresh
        });
        if disjoint {
            out.push(chosen);
        }
    }
    out
}

/// Smallest `d <= limit` with `U^d = I`, by plain repeated multiplication.
pub fn exhaustive_period(u: &RationalMatrix, limit: u64) -> Option<u64> {
    let mut p = RationalMatrix::identity(u.rows());
    for d in 1..=limit {
        p = p.mul(u).unwrap();
        if p.is_identity() {
            return Some(d);
        }
    }
    None
}

/// Graphs used for the structural checks: all connected graphs on two to six
/// vertices, all odd-unicyclic graphs up to eight, and the named families.
pub fn corpus() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=6 {
        out.extend(enumerate_connected(n).unwrap());
    }
    out.extend(enumerate_odd_unicyclic(8).unwrap());
    let mut specs = vec![FamilySpec::Path(2)];
    specs.extend((3..=11).map(FamilySpec::Cycle));
    for m in 1..=4 {
        specs.extend((m..=4).map(|n| FamilySpec::CompleteBipartite(m, n)));
    }
    for k in [3, 5] {
        specs.extend((1..=5).map(|r| FamilySpec::TwoTail(k, r)));
    }
    out.extend(specs.into_iter().map(|s| make_family(s).unwrap()));
    out
}
