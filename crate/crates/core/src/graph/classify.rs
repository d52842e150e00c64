use serde::Serialize;

use super::{Edge, Graph};

/// The unique cycle of an odd-unicyclic graph together with the remaining forest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicycleDecomposition {
    /// Cycle vertices in traversal order, starting at the smallest id and
    /// stepping toward its smaller-id cycle neighbour.
    pub cycle: Vec<usize>,
    pub girth: usize,
    pub forest_edges: Vec<Edge>,
}

impl UnicycleDecomposition {
    pub fn cycle_edges(&self) -> Vec<Edge> {
        let k = self.cycle.len();
        let mut edges: Vec<Edge> = (0..k)
            .map(|i| Edge::new(self.cycle[i], self.cycle[(i + 1) % k]))
            .collect();
        edges.sort_unstable();
        edges
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        self.cycle.contains(&v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Classification {
    Tree,
    /// Bipartite with at least one (even) cycle.
    Bipartite,
    OddUnicycle(UnicycleDecomposition),
    Other,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Tree => "tree",
            Classification::Bipartite => "bipartite",
            Classification::OddUnicycle(_) => "odd_unicycle",
            Classification::Other => "other",
        }
    }

    pub fn decomposition(&self) -> Option<&UnicycleDecomposition> {
        match self {
            Classification::OddUnicycle(d) => Some(d),
            _ => None,
        }
    }
}

pub fn classify(g: &Graph) -> Classification {
    let n = g.vertex_count();
    let m = g.edge_count();
    if m + 1 == n {
        return Classification::Tree;
    }
    if g.is_bipartite() {
        return Classification::Bipartite;
    }
    if m != n {
        return Classification::Other;
    }
    Classification::OddUnicycle(unicycle_decomposition(g))
}

/// Peels degree-1 vertices until only the cycle is left. Only meaningful on
/// connected graphs with `|V| = |E|`.
fn unicycle_decomposition(g: &Graph) -> UnicycleDecomposition {
    let n = g.vertex_count();
    let mut deg = g.degrees();
    let mut removed = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if removed[v] {
            continue;
        }
        removed[v] = true;
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }

    let on_cycle = |v: usize| !removed[v];
    let start = (0..n).find(|&v| on_cycle(v)).expect("unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&w| on_cycle(w))
        .expect("cycle vertex has a cycle neighbour");
    while cur != start {
        cycle.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle(w) && w != prev)
            .expect("cycle vertices have exactly two cycle neighbours");
        prev = cur;
        cur = next;
    }

    let forest_edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !(on_cycle(e.0) && on_cycle(e.1)))
        .collect();
    let girth = cycle.len();
    UnicycleDecomposition {
        cycle,
        girth,
        forest_edges,
    }
}
