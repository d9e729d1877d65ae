//! Simple undirected graphs over `0..n` with bitset adjacency, and the
//! clique machinery built on them.

mod cobipartite;
mod matching;
mod oracle;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::geometry::{intersects, GeomObject, Tolerance};

pub use cobipartite::{is_cobipartite, CobipartitePartition, OddCycleCertificate};
pub use matching::{bipartite_mis, max_clique_cobipartite, maximum_matching};
pub use oracle::{max_clique_bruteforce, max_clique_bruteforce_capped, DEFAULT_ORACLE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("oracle cap exceeded: {n} vertices > cap {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("coloring is not proper: {0} and {1} share a side")]
    ImproperColoring(usize, usize),
}

/// Read-only adjacency, implemented by graphs and by complement views.
pub trait Adjacency {
    fn adjacent(&self, u: usize, v: usize) -> bool;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; duplicates are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange(w, n));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// The graph induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> ComplementView<'_> {
        ComplementView { graph: self }
    }

    pub fn vertex_set(&self, vertices: &[usize]) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n());
        s.extend(vertices.iter().copied());
        s
    }
}

impl Adjacency for Graph {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v)
    }
}

/// The complement of a graph, evaluated lazily per query.
#[derive(Clone, Copy, Debug)]
pub struct ComplementView<'a> {
    graph: &'a Graph,
}

impl Adjacency for ComplementView<'_> {
    fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && !self.graph.has_edge(u, v)
    }
}

/// Vertex `i` is `objects[i]`; `{i, j}` is an edge iff the objects meet.
pub fn build_intersection_graph(objects: &[GeomObject], tol: Tolerance) -> Graph {
    let mut g = Graph::empty(objects.len());
    for i in 0..objects.len() {
        for j in i + 1..objects.len() {
            if intersects(&objects[i], &objects[j], tol) {
                g.adj[i].insert(j);
                g.adj[j].insert(i);
            }
        }
    }
    g
}

#[cfg(test)]
pub(crate) mod tests;
