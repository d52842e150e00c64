//! Exact-arithmetic analysis of Grover walks on finite simple connected graphs.
//!
//! The crate builds the Grover evolution operator on the arcs of a graph and the
//! transition matrix of the isotropic random walk, computes characteristic
//! polynomials over the rationals, and decides periodicity with exact
//! certificates. It also hosts the matching-sum identities that tie the
//! coefficients of the transition-matrix characteristic polynomial to the
//! structure of odd-unicyclic graphs, and the small-graph enumerators used to
//! check the odd-period characterization exhaustively.
//!
//! Module map:
//!
//! * [`graph`]: graph representation, arcs, classification, matchings, file I/O.
//! * [`families`]: named families, canonical forms, isomorph-free enumeration, census.
//! * [`linalg`]: rational scalars and matrices, characteristic polynomials, Jacobi eigensolver.
//! * [`walk`]: Grover operator, transition matrix, spectral-map check.
//! * [`periodicity`]: period detection, integrality and degree filters, matching identities.

pub mod families;
pub mod graph;
pub mod linalg;
pub mod periodicity;
pub mod walk;

pub use families::{FamilySpec, make_family};
pub use graph::{Arc, Classification, Edge, Graph, GraphError, Matching, UnicycleDecomposition};
pub use linalg::{CharPoly, RationalMatrix, RationalScalar, RealMatrix, Spectrum};
pub use periodicity::{find_period, PeriodConfig, PeriodReport, Verdict};
pub use walk::{build_grover_operator, build_transition_matrix, GroverOperator, TransitionMatrix};
