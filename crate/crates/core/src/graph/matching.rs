use serde::Serialize;

use super::{Edge, Graph};

/// A set of pairwise vertex-disjoint edges, listed in canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }
}

/// Lazy depth-first enumeration of `t`-matchings over a fixed candidate edge
/// list. Each matching is produced once, as an increasing sequence of
/// candidate positions.
#[derive(Debug, Clone)]
pub struct Matchings {
    candidates: Vec<Edge>,
    t: usize,
    stack: Vec<usize>,
    used: Vec<bool>,
    cursor: usize,
    done: bool,
}

impl Matchings {
    fn new(n: usize, candidates: Vec<Edge>, t: usize) -> Self {
        Matchings {
            done: t > candidates.len(),
            candidates,
            t,
            stack: Vec::with_capacity(t),
            used: vec![false; n],
            cursor: 0,
        }
    }

    fn backtrack(&mut self) -> bool {
        match self.stack.pop() {
            None => false,
            Some(i) => {
                let e = self.candidates[i];
                self.used[e.0] = false;
                self.used[e.1] = false;
                self.cursor = i + 1;
                true
            }
        }
    }
}

impl Iterator for Matchings {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        if self.done {
            return None;
        }
        loop {
            if self.stack.len() == self.t {
                let m = Matching {
                    edges: self.stack.iter().map(|&i| self.candidates[i]).collect(),
                };
                if !self.backtrack() {
                    self.done = true;
                }
                return Some(m);
            }
            let needed = self.t - self.stack.len();
            let mut pushed = false;
            while self.cursor + needed <= self.candidates.len() {
                let i = self.cursor;
                self.cursor += 1;
                let e = self.candidates[i];
                if !self.used[e.0] && !self.used[e.1] {
                    self.used[e.0] = true;
                    self.used[e.1] = true;
                    self.stack.push(i);
                    pushed = true;
                    break;
                }
            }
            if !pushed && !self.backtrack() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Enumerates every `t`-matching drawn from `allowed` (all edges when `None`)
/// whose edges avoid `forbidden_vertices`. `t = 0` yields the empty matching.
///
/// Edges in `allowed` that are not edges of `g` are ignored.
pub fn enumerate_matchings(
    g: &Graph,
    t: usize,
    allowed: Option<&[Edge]>,
    forbidden_vertices: Option<&[usize]>,
) -> Matchings {
    let forbidden = forbidden_vertices.unwrap_or(&[]);
    let candidates: Vec<Edge> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| allowed.is_none_or(|a| a.contains(e)))
        .filter(|e| !forbidden.iter().any(|&v| e.touches(v)))
        .collect();
    Matchings::new(g.vertex_count(), candidates, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn cycle(k: usize) -> Graph {
        let e: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        build_graph(k, &e).unwrap()
    }

    #[test]
    fn triangle_matchings() {
        let c3 = cycle(3);
        assert_eq!(enumerate_matchings(&c3, 1, None, None).count(), 3);
        assert_eq!(enumerate_matchings(&c3, 2, None, None).count(), 0);
        let empty: Vec<_> = enumerate_matchings(&c3, 0, None, None).collect();
        assert_eq!(empty, vec![Matching { edges: vec![] }]);
    }

    #[test]
    fn pentagon_two_matchings() {
        assert_eq!(enumerate_matchings(&cycle(5), 2, None, None).count(), 5);
    }

    #[test]
    fn restrictions() {
        let c5 = cycle(5);
        let allowed = [Edge(0, 1), Edge(2, 3), Edge(3, 4)];
        assert_eq!(enumerate_matchings(&c5, 1, Some(&allowed), None).count(), 3);
        assert_eq!(enumerate_matchings(&c5, 2, Some(&allowed), None).count(), 2);
        assert_eq!(enumerate_matchings(&c5, 1, Some(&allowed), Some(&[3])).count(), 1);
        assert_eq!(enumerate_matchings(&c5, 3, None, None).count(), 0);
    }

    #[test]
    fn matchings_are_disjoint_and_unique() {
        let c6 = cycle(6);
        let all: Vec<_> = enumerate_matchings(&c6, 2, None, None).collect();
        for m in &all {
            assert!(!m.edges[0].shares_vertex(&m.edges[1]));
        }
        let mut dedup = all.clone();
        dedup.sort_by(|a, b| a.edges.cmp(&b.edges));
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
        // C_6 has 9 two-matchings: 6 * 3 / 2
        assert_eq!(all.len(), 9);
    }
}
