use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canonical::{canonical_graph, CanonicalForm};
use super::{FamilyError, FamilySpec, make_family};
use crate::graph::Graph;

pub const DEFAULT_ENUMERATION_CAP: usize = 9;
pub const MAX_ENUMERATION_CAP: usize = 12;

fn check_cap(n: usize, cap: usize) -> Result<(), FamilyError> {
    if n > cap.min(MAX_ENUMERATION_CAP) {
        return Err(FamilyError::CapExceeded {
            requested: n,
            cap: cap.min(MAX_ENUMERATION_CAP),
        });
    }
    Ok(())
}

type Level = BTreeMap<CanonicalForm, Graph>;

fn dedupe(graphs: impl ParallelIterator<Item = Graph>) -> Level {
    graphs
        .map(|g| canonical_graph(&g))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, in canonical labeling and sorted by canonical form.
///
/// Every connected graph has a vertex whose removal keeps it connected, so
/// each level is grown from the previous one by adding a vertex joined to a
/// nonempty subset.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>, FamilyError> {
    enumerate_connected_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_connected_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("vertex count must be at least 1".into()));
    }
    check_cap(n, cap)?;
    let mut level: Level = dedupe(rayon::iter::once(make_family(FamilySpec::Path(1))?));
    for size in 1..n {
        let subsets: Vec<Vec<usize>> = (1u32..1 << size)
            .map(|mask| (0..size).filter(|&v| mask & (1 << v) != 0).collect())
            .collect();
        let parents: Vec<&Graph> = level.values().collect();
        level = dedupe(parents.into_par_iter().flat_map_iter(|g| {
            subsets
                .iter()
                .map(move |s| g.with_new_vertex(s).expect("new vertex keeps the graph simple"))
        }));
    }
    Ok(level.into_values().collect())
}

/// One representative per isomorphism class of connected graphs with as many
/// edges as vertices, an odd cycle, and at most `n_max` vertices. Sorted by
/// vertex count, then canonical form.
///
/// Graphs of each size come from the previous size by hanging a leaf on any
/// vertex, together with the bare odd cycle of that size.
pub fn enumerate_odd_unicyclic(n_max: usize) -> Result<Vec<Graph>, FamilyError> {
    enumerate_odd_unicyclic_with_cap(n_max, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_odd_unicyclic_with_cap(n_max: usize, cap: usize) -> Result<Vec<Graph>, FamilyError> {
    check_cap(n_max, cap)?;
    let mut out = Vec::new();
    let mut level: Level = BTreeMap::new();
    for n in 3..=n_max {
        let parents: Vec<&Graph> = level.values().collect();
        let mut next = dedupe(parents.into_par_iter().flat_map_iter(|g| {
            (0..g.vertex_count()).map(move |v| g.with_new_vertex(&[v]).expect("leaf keeps the graph simple"))
        }));
        if n % 2 == 1 {
            let (form, c) = canonical_graph(&make_family(FamilySpec::Cycle(n))?);
            next.insert(form, c);
        }
        out.extend(next.values().cloned());
        level = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Classification;
    use crate::graph::classify;

    #[test]
    fn small_connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn odd_unicyclic_small_cases() {
        let three = enumerate_odd_unicyclic(3).unwrap();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].edge_count(), 3);
        let four = enumerate_odd_unicyclic(4).unwrap();
        assert_eq!(four.len(), 2);
        for g in enumerate_odd_unicyclic(7).unwrap() {
            assert!(matches!(classify(&g), Classification::OddUnicycle(_)));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_connected(10), Err(FamilyError::CapExceeded { requested: 10, cap: 9 })));
        assert!(matches!(
            enumerate_odd_unicyclic_with_cap(13, 20),
            Err(FamilyError::CapExceeded { cap: 12, .. })
        ));
        assert!(enumerate_connected(0).is_err());
    }
}
