use grover_core::families::{canonical_form, enumerate_connected, enumerate_odd_unicyclic};
use grover_core::graph::{classify, Classification};

#[test]
fn connected_counts_through_seven() {
    let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
}

#[test]
fn odd_unicyclic_equals_filtered_connected() {
    let constructive = enumerate_odd_unicyclic(7).unwrap();
    for n in 3..=7 {
        let mut direct: Vec<_> = enumerate_connected(n)
            .unwrap()
            .iter()
            .filter(|g| matches!(classify(g), Classification::OddUnicycle(_)))
            .map(canonical_form)
            .collect();
        let mut built: Vec<_> = constructive.iter().filter(|g| g.vertex_count() == n).map(canonical_form).collect();
        direct.sort();
        built.sort();
        assert_eq!(direct, built, "n = {n}");
    }
}

#[test]
fn odd_unicyclic_counts_per_size() {
    let all = enumerate_odd_unicyclic(9).unwrap();
    let per_size: Vec<usize> = (3..=9).map(|n| all.iter().filter(|g| g.vertex_count() == n).count()).collect();
    assert_eq!(per_size[5..], [55, 155]);
    let mut forms: Vec<_> = all.iter().map(canonical_form).collect();
    forms.dedup();
    assert_eq!(forms.len(), all.len());
}
