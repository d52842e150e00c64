//! Named graph families, canonical forms and isomorph-free enumeration.

mod canonical;
mod census;
mod enumerate;

pub use canonical::{canonical_form, canonical_graph, canonical_labeling, is_isomorphic, CanonicalForm, MAX_CANONICAL_VERTICES};
pub use census::{census, census_records, CensusRecord};
pub use enumerate::{
    enumerate_connected, enumerate_connected_with_cap, enumerate_odd_unicyclic, enumerate_odd_unicyclic_with_cap,
    DEFAULT_ENUMERATION_CAP, MAX_ENUMERATION_CAP,
};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex count {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

/// A member of one of the named families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `C_k`, `k >= 3`.
    Cycle(usize),
    /// `P_r` on `r` vertices.
    Path(usize),
    CompleteBipartite(usize, usize),
    /// Odd cycle `C_k` with two pendant paths of `r` edges each, all meeting
    /// at one cycle vertex.
    TwoTail(usize, usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let bad = |m: String| Err(FamilyError::InvalidParameter(m));
        match *self {
            FamilySpec::Cycle(k) if k < 3 => bad(format!("cycle length must be at least 3, got {k}")),
            FamilySpec::Path(0) => bad("path needs at least one vertex".into()),
            FamilySpec::CompleteBipartite(m, n) if m == 0 || n == 0 => {
                bad(format!("both sides of K_{{m,n}} must be nonempty, got {m},{n}"))
            }
            FamilySpec::TwoTail(k, _) if k < 3 || k % 2 == 0 => bad(format!("two-tail cycle length must be odd and at least 3, got {k}")),
            FamilySpec::TwoTail(_, 0) => bad("two-tail paths need at least one edge".into()),
            _ => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Cycle(k) => k,
            FamilySpec::Path(r) => r,
            FamilySpec::CompleteBipartite(m, n) => m + n,
            FamilySpec::TwoTail(k, r) => k + 2 * r,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(k) => write!(f, "cycle:{k}"),
            FamilySpec::Path(r) => write!(f, "path:{r}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "kbipartite:{m},{n}"),
            FamilySpec::TwoTail(k, r) => write!(f, "twotail:{k},{r}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    /// Parses `cycle:k`, `path:r`, `kbipartite:m,n` or `twotail:k,r`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::InvalidParameter(format!("unrecognised family '{s}'"));
        let (kind, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("cycle", &[k]) => FamilySpec::Cycle(k),
            ("path", &[r]) => FamilySpec::Path(r),
            ("kbipartite", &[m, n]) => FamilySpec::CompleteBipartite(m, n),
            ("twotail", &[k, r]) => FamilySpec::TwoTail(k, r),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Builds the family member with its fixed labeling. For `TwoTail(k, r)` the
/// shared vertex is 0, the remaining cycle vertices are `1..k` in cycle order,
/// the first tail is `k..k+r` and the second `k+r..k+2r`, each numbered
/// outward from the shared vertex.
pub fn make_family(spec: FamilySpec) -> Result<Graph, FamilyError> {
    spec.validate()?;
    let mut edges = Vec::new();
    match spec {
        FamilySpec::Cycle(k) => edges.extend((0..k).map(|i| (i, (i + 1) % k))),
        FamilySpec::Path(r) => edges.extend((1..r).map(|i| (i - 1, i))),
        FamilySpec::CompleteBipartite(m, n) => {
            for a in 0..m {
                edges.extend((m..m + n).map(|b| (a, b)));
            }
        }
        FamilySpec::TwoTail(k, r) => {
            edges.extend((0..k).map(|i| (i, (i + 1) % k)));
            for start in [k, k + r] {
                edges.push((0, start));
                edges.extend((start + 1..start + r).map(|v| (v - 1, v)));
            }
        }
    }
    Ok(Graph::new(spec.vertex_count(), &edges).expect("family constructions are valid graphs"))
}
