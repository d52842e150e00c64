use rayon::prelude::*;

use super::{enumerate_odd_unicyclic_with_cap, FamilyError};
use crate::graph::{classify, Classification, Graph};
use crate::linalg::{charpoly_exact, CharPoly};
use crate::periodicity::{find_period, integrality_filter, PeriodConfig, PeriodError, PeriodReport};
use crate::walk::build_transition_matrix;

#[derive(Debug, Clone)]
pub struct CensusRecord {
    pub graph: Graph,
    pub classification: Classification,
    /// Characteristic polynomial of `T`.
    pub charpoly: CharPoly,
    /// Failing indices of the integrality filter; empty when it passes.
    pub integrality_failing: Vec<usize>,
    pub period: Result<PeriodReport, PeriodError>,
}

impl CensusRecord {
    pub fn compute(graph: Graph, config: &PeriodConfig) -> CensusRecord {
        let classification = classify(&graph);
        let charpoly = charpoly_exact(&build_transition_matrix(&graph).matrix).expect("T is square");
        let integrality_failing = integrality_filter(&charpoly);
        let period = find_period(&graph, config);
        CensusRecord {
            graph,
            classification,
            charpoly,
            integrality_failing,
            period,
        }
    }

    pub fn odd_period(&self) -> Option<u64> {
        self.period.as_ref().ok()?.period().filter(|p| p % 2 == 1)
    }
}

/// Records for the given graphs, computed in parallel, in input order.
pub fn census_records(graphs: Vec<Graph>, config: &PeriodConfig) -> Vec<CensusRecord> {
    graphs.into_par_iter().map(|g| CensusRecord::compute(g, config)).collect()
}

/// One record per odd-unicyclic class with at most `max_n` vertices.
pub fn census(max_n: usize, cap: usize, config: &PeriodConfig) -> Result<Vec<CensusRecord>, FamilyError> {
    Ok(census_records(enumerate_odd_unicyclic_with_cap(max_n, cap)?, config))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::periodicity::{graph_hash, Verdict};

    #[test]
    fn four_vertex_census() {
        let records = census(4, 9, &PeriodConfig::default()).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].odd_period(), Some(3));
        let paw = &records[1];
        assert!(!paw.integrality_failing.is_empty());
        let report = paw.period.as_ref().unwrap();
        assert!(matches!(report.verdict, Verdict::RefutedByIntegrality { .. }));
        assert_eq!(report.graph_hash, graph_hash(&paw.graph));
    }
}
