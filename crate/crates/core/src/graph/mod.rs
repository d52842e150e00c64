//! Simple connected undirected graphs with a canonical arc order.

mod classify;
pub mod io;
mod matching;

pub use classify::{classify, Classification, UnicycleDecomposition};
pub use matching::{enumerate_matchings, Matching, Matchings};

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Validation failures raised while building a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("edge ({u}, {v}) references a vertex outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop edge at vertex {0}: graphs must be simple")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0}, {1}}}: graphs must be simple")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertex {unreachable} is not reachable from vertex 0")]
    Disconnected { unreachable: usize },
}

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct Edge(pub usize, pub usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// An oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct Arc {
    pub origin: usize,
    pub terminus: usize,
}

impl Arc {
    pub fn reversed(self) -> Arc {
        Arc {
            origin: self.terminus,
            terminus: self.origin,
        }
    }

    /// Sort key `(min endpoint, max endpoint, direction flag)`; the flag is 0
    /// for the arc leaving the smaller endpoint.
    fn order_key(&self) -> (usize, usize, u8) {
        if self.origin < self.terminus {
            (self.origin, self.terminus, 0)
        } else {
            (self.terminus, self.origin, 1)
        }
    }
}

/// A validated simple connected graph on vertices `0..n`.
///
/// Edges are kept sorted, so two graphs built from the same edge set compare
/// equal no matter the order the pairs were supplied in.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and builds a graph. A single isolated vertex (`n = 1`, no
    /// edges) is accepted as the trivial connected graph.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.push(Edge::new(u, v));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adjacency = vec![Vec::new(); n];
        for e in &edges {
            adjacency[e.0].push(e.1);
            adjacency[e.1].push(e.0);
        }
        for nb in &mut adjacency {
            nb.sort_unstable();
        }

        let g = Graph { n, edges, adjacency };
        if let Some(unreachable) = g.first_unreachable() {
            return Err(GraphError::Disconnected { unreachable });
        }
        Ok(g)
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (sorted) order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of the edge in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    /// All arcs, both orientations of every edge, in canonical index order.
    pub fn arcs(&self) -> Vec<Arc> {
        let mut arcs = Vec::with_capacity(2 * self.edges.len());
        for e in &self.edges {
            arcs.push(Arc {
                origin: e.0,
                terminus: e.1,
            });
            arcs.push(Arc {
                origin: e.1,
                terminus: e.0,
            });
        }
        debug_assert!(arcs.windows(2).all(|w| w[0].order_key() < w[1].order_key()));
        arcs
    }

    /// Canonical index of an arc: edge position times two, plus one for the
    /// orientation leaving the larger endpoint.
    pub fn arc_index(&self, arc: Arc) -> Option<usize> {
        let (lo, hi, flag) = arc.order_key();
        self.edge_index(Edge(lo, hi)).map(|i| 2 * i + flag as usize)
    }

    /// Proper 2-coloring if one exists.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        color[0] = 0;
        let mut queue = VecDeque::from([0]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal vertex count");
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|e| (perm[e.0], perm[e.1])).collect();
        Graph::new(self.n, &pairs).expect("relabeling preserves validity")
    }

    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.edges.iter().map(|e| (e.0, e.1)).collect()
    }

    /// Adds a new vertex `n` adjacent to every vertex in `neighbors`.
    pub fn with_new_vertex(&self, neighbors: &[usize]) -> Result<Graph, GraphError> {
        let mut pairs = self.edge_pairs();
        pairs.extend(neighbors.iter().map(|&v| (v, self.n)));
        Graph::new(self.n + 1, &pairs)
    }
}

/// Convenience wrapper around [`Graph::new`].
pub fn build_graph(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
    Graph::new(n, edge_list)
}
