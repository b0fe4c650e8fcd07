//! Simple undirected graphs, used for digon graphs and treewidth checks.

use crate::digraph::GraphError;
use std::collections::HashSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl UndirectedGraph {
    /// Edges are stored with u < v; a pair given in either orientation twice
    /// counts as a duplicate.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canon = Vec::with_capacity(edges.len());
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::OutOfRange { v: a, n });
            }
            if b >= n {
                return Err(GraphError::OutOfRange { v: b, n });
            }
            if a == b {
                return Err(GraphError::LoopArc(a));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateArc(a, b));
            }
            canon.push(e);
            adj[a].push(b);
            adj[b].push(a);
        }
        canon.sort_unstable();
        for l in adj.iter_mut() {
            l.sort_unstable();
        }
        Ok(UndirectedGraph { n, edges: canon, adj })
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        UndirectedGraph::from_edge_list(n, &edges).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted lexicographically, each with u < v.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adj(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }
}
