// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Graphs as boolean adjacency matrices with optional vertex labels.
//!
//! A stored entry `(i, j)` is the arc `i → j`. Undirected graphs store both
//! directions of every edge and a self loop as a single diagonal entry.

use crate::error::{Error, Result};
use crate::sparse::SparseMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: SparseMatrix,
    directed: bool,
    labels: Option<Labels>,
}

/// Vertex labels `f(i) ∈ 1..=count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labels {
    ids: Vec<u32>,
    count: u32,
}

impl Labels {
    pub fn new(ids: Vec<u32>, count: u32) -> Result<Self> {
        if count == 0 {
            return Err(Error::InvalidGraph("label set must be non-empty".into()));
        }
        if let Some((v, &bad)) = ids.iter().enumerate().find(|(_, &q)| q == 0 || q > count) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} has label {bad}, expected 1..={count}",
                v + 1
            )));
        }
        Ok(Labels { ids, count })
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn count(&self) -> u32 {
        self.count
    }

    pub fn of(&self, vertex: usize) -> u32 {
        self.ids[vertex]
    }
}

impl Graph {
    /// Wraps a symmetric boolean matrix as an undirected graph.
    pub fn undirected(adj: SparseMatrix) -> Result<Self> {
        if !adj.is_boolean() {
            return Err(Error::InvalidGraph("adjacency entries must be 0/1".into()));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvalidGraph(
                "undirected graph needs a symmetric adjacency matrix".into(),
            ));
        }
        Ok(Graph {
            adj,
            directed: false,
            labels: None,
        })
    }

    /// Wraps a boolean matrix as a directed graph.
    pub fn directed(adj: SparseMatrix) -> Result<Self> {
        if !adj.is_boolean() {
            return Err(Error::InvalidGraph("adjacency entries must be 0/1".into()));
        }
        Ok(Graph {
            adj,
            directed: true,
            labels: None,
        })
    }

    /// Builds a graph from 0-based edge pairs. Undirected edges are
    /// symmetrized; repeated pairs collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)], directed: bool) -> Result<Self> {
        if directed {
            Self::directed(SparseMatrix::from_pattern(n, edges.iter().copied())?)
        } else {
            let both = edges.iter().flat_map(|&(u, v)| [(u, v), (v, u)]);
            Self::undirected(SparseMatrix::from_pattern(n, both)?)
        }
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self> {
        if labels.ids.len() != self.n() {
            return Err(Error::InvalidGraph(format!(
                "{} labels for {} vertices",
                labels.ids.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn n(&self) -> usize {
        self.adj.dim()
    }

    pub fn adj(&self) -> &SparseMatrix {
        &self.adj
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.position(u, v).is_some()
    }

    /// Out-neighbors of `u`, including `u` itself when it carries a loop.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        self.adj.row_cols(u)
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_edge(u, u)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n()).any(|u| self.has_loop(u))
    }

    /// Self-loop indicator per vertex.
    pub fn loops(&self) -> Vec<bool> {
        (0..self.n()).map(|u| self.has_loop(u)).collect()
    }

    pub fn loop_count(&self) -> usize {
        (0..self.n()).filter(|&u| self.has_loop(u)).count()
    }

    /// Number of non-loop out-neighbors.
    pub fn degree(&self, u: usize) -> usize {
        self.neighbors(u).len() - usize::from(self.has_loop(u))
    }

    /// Undirected: each edge once, loops once. Directed: number of arcs.
    pub fn edge_count(&self) -> usize {
        if self.directed {
            self.adj.nnz()
        } else {
            let loops = self.loop_count();
            (self.adj.nnz() - loops) / 2 + loops
        }
    }

    /// The same graph with every self loop removed.
    pub fn hollow(&self) -> Graph {
        Graph {
            adj: self.adj.strip_loops().0,
            ..self.clone()
        }
    }

    /// The same graph with a self loop on every vertex (`A + I` for loop-free `A`).
    pub fn with_all_loops(&self) -> Graph {
        let hollow = self.adj.strip_loops().0;
        Graph {
            adj: hollow.add(&SparseMatrix::identity(self.n())).expect("dimensions agree"),
            ..self.clone()
        }
    }

    /// Undirected edges `(u, v)` with `u <= v`, in row-major order.
    pub fn undirected_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().filter(|&(u, v, _)| u <= v).map(|(u, v, _)| (u, v))
    }

    /// True when every vertex is reachable from vertex 0 ignoring direction.
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let sym = if self.directed {
            self.adj.add(&self.adj.transpose()).expect("dimensions agree")
        } else {
            self.adj.clone()
        };
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in sym.row_cols(u) {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == n
    }

    pub(crate) fn require_undirected(&self, what: &str) -> Result<()> {
        if self.directed {
            return Err(Error::Precondition(format!("{what} needs an undirected graph")));
        }
        Ok(())
    }

    pub(crate) fn require_loop_free(&self, what: &str) -> Result<()> {
        if let Some(u) = (0..self.n()).find(|&u| self.has_loop(u)) {
            return Err(Error::Precondition(format!(
                "{what} needs a loop-free graph, vertex {} has a self loop",
                u + 1
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn undirected_requires_symmetry() {
        let m = SparseMatrix::from_pattern(2, [(0, 1)]).unwrap();
        assert!(Graph::undirected(m.clone()).is_err());
        assert!(Graph::directed(m).is_ok());
    }

    #[test]
    fn edge_count_counts_loops_once() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 2)], false).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.loop_count(), 1);
        assert_eq!(g.degree(2), 1);
        assert_eq!(g.hollow().edge_count(), 2);
        assert_eq!(g.with_all_loops().loop_count(), 3);
    }

    #[test]
    fn labels_validate_range() {
        assert!(Labels::new(vec![1, 3], 2).is_err());
        assert!(Labels::new(vec![0], 2).is_err());
        let g = Graph::from_edges(2, &[(0, 1)], false).unwrap();
        assert!(g.clone().with_labels(Labels::new(vec![1], 1).unwrap()).is_err());
        assert!(g.with_labels(Labels::new(vec![1, 2], 2).unwrap()).is_ok());
    }

    #[test]
    fn connectivity() {
        assert!(Graph::from_edges(3, &[(0, 1), (1, 2)], false).unwrap().is_connected());
        assert!(!Graph::from_edges(3, &[(0, 1)], false).unwrap().is_connected());
        assert!(Graph::from_edges(3, &[(0, 1), (2, 1)], true).unwrap().is_connected());
    }
}
