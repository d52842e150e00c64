//! Canonical forms for small graphs.
//!
//! The form is the lexicographically smallest upper-triangle adjacency bit
//! string over all vertex orders that respect an isomorphism-invariant colour
//! refinement (degree, then iterated neighbour-colour multisets). Twins are
//! tried only once per level since swapping them is an automorphism.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Largest vertex count whose upper triangle fits in the 128-bit code.
pub const MAX_CANONICAL_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u128,
}

/// Colour classes as ranks of sorted signatures, stable under relabeling.
fn refine_colors(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut color: Vec<usize> = g.degrees();
    let mut classes = distinct(&color);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut sorted: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.into_iter().enumerate().map(|(i, s)| (s, i)).collect()
        };
        let next: Vec<usize> = signatures.iter().map(|s| ranks[s]).collect();
        let next_classes = distinct(&next);
        color = next;
        if next_classes == classes {
            return color;
        }
        classes = next_classes;
    }
}

fn distinct(v: &[usize]) -> usize {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    total_bits: u32,
    /// Colour required at each position.
    slot_color: Vec<usize>,
    color: Vec<usize>,
    twins: Vec<Vec<bool>>,
    perm: Vec<usize>,
    used: Vec<bool>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn column_bits(&self, p: usize, v: usize) -> u128 {
        let mut bits = 0u128;
        for i in 0..p {
            bits = (bits << 1) | self.g.has_edge(self.perm[i], v) as u128;
        }
        bits
    }

    fn run(&mut self, p: usize, prefix: u128) {
        if p == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.perm.clone()));
            }
            return;
        }
        let prefix_bits = (p * p.saturating_sub(1) / 2) as u32;
        let new_bits = prefix_bits + p as u32;
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used[v] || self.color[v] != self.slot_color[p] {
                continue;
            }
            if tried.iter().any(|&u| self.twins[u][v]) {
                continue;
            }
            tried.push(v);
            let new_prefix = (prefix << p) | self.column_bits(p, v);
            if let Some((best, _)) = &self.best {
                if new_prefix > best >> (self.total_bits - new_bits) {
                    continue;
                }
            }
            self.used[v] = true;
            self.perm[p] = v;
            self.run(p + 1, new_prefix);
            self.used[v] = false;
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn twin_table(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut t = vec![vec![false; n]; n];
    for u in 0..n {
        for v in u + 1..n {
            let strip = |a: usize, b: usize| -> Vec<usize> { g.neighbors(a).iter().copied().filter(|&w| w != b).collect() };
            if strip(u, v) == strip(v, u) {
                t[u][v] = true;
                t[v][u] = true;
            }
        }
    }
    t
}

/// Canonical form together with the optimal order (`order[p]` is the vertex
/// placed at position `p`).
pub fn canonical_labeling(g: &Graph) -> (CanonicalForm, Vec<usize>) {
    let n = g.vertex_count();
    assert!(n <= MAX_CANONICAL_VERTICES, "canonical form supports at most {MAX_CANONICAL_VERTICES} vertices");
    let color = refine_colors(g);
    let mut slot_color = color.clone();
    slot_color.sort_unstable();
    let mut search = Search {
        g,
        n,
        total_bits: (n * n.saturating_sub(1) / 2) as u32,
        slot_color,
        color,
        twins: twin_table(g),
        perm: vec![0; n],
        used: vec![false; n],
        best: None,
    };
    search.run(0, 0);
    let (code, order) = search.best.expect("at least one vertex order exists");
    (CanonicalForm { n, code }, order)
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// The isomorphic copy of `g` in canonical labeling.
pub fn canonical_graph(g: &Graph) -> (CanonicalForm, Graph) {
    let (form, order) = canonical_labeling(g);
    let mut relabel = vec![0; g.vertex_count()];
    for (pos, &v) in order.iter().enumerate() {
        relabel[v] = pos;
    }
    (form, g.relabel(&relabel))
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
