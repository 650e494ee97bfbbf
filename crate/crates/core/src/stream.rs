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

//! Block-partitioned edge streaming, neighborhoods, egonets and pointwise
//! ground truth for `C = A ⊗ B`, without materializing `C`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::directed::{split_reciprocal_directed, DirectedProduct};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kron::{LoopRegime, ProductStats, ProductSummary};
use crate::labeled::LabeledProduct;
use crate::sparse::{IndexMap, SparseMatrix};

/// Default egonet size limit, in neighbors.
pub const EGONET_LIMIT: usize = 100_000;

/// An inclusive interval of 1-based row blocks of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockRange {
    lo: u64,
    hi: u64,
}

impl BlockRange {
    pub fn new(lo: u64, hi: u64, n_a: u64) -> Result<Self> {
        if lo < 1 || lo > hi || hi > n_a {
            return Err(Error::Domain(format!(
                "block range {lo}..={hi} is not within 1..={n_a}"
            )));
        }
        Ok(BlockRange { lo, hi })
    }

    pub fn full(n_a: u64) -> Result<Self> {
        Self::new(1, n_a, n_a)
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Splits `1..=n_a` into at most `parts` contiguous ranges.
    pub fn partition(n_a: u64, parts: u64) -> Result<Vec<Self>> {
        if parts == 0 || n_a == 0 {
            return Err(Error::Domain("partition needs at least one part and one block".into()));
        }
        let parts = parts.min(n_a);
        let (base, extra) = (n_a / parts, n_a % parts);
        let mut out = Vec::with_capacity(parts as usize);
        let mut lo = 1;
        for r in 0..parts {
            let len = base + u64::from(r < extra);
            out.push(BlockRange { lo, hi: lo + len - 1 });
            lo += len;
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EmitMode {
    /// Every stored entry, so both directions of an undirected edge.
    #[default]
    All,
    /// Only entries with `p ≤ q`.
    Canonical,
}

/// Immutable view of `C = A ⊗ B` with every factor statistic precomputed.
#[derive(Clone, Debug)]
pub struct ProductHandle {
    a: Graph,
    b: Graph,
    a_sym: SparseMatrix,
    stats: ProductStats,
    directed: Option<DirectedProduct>,
    labeled: Option<LabeledProduct>,
    index: IndexMap,
    n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub vertex: u64,
    pub block: u64,
    pub intra: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<u32>,
    pub degree: u64,
    pub triangles: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directed: Option<BTreeMap<String, u128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeled: Option<BTreeMap<String, u128>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeRecord {
    pub source: u64,
    pub target: u64,
    pub present: bool,
    pub triangles: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub directed: Option<BTreeMap<String, u128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeled: Option<BTreeMap<String, u128>>,
}

/// Induced subgraph on the neighbors of a product vertex.
#[derive(Clone, Debug)]
pub struct Egonet {
    pub center: u64,
    /// Product ids of the local vertices `0..members.len()`.
    pub members: Vec<u64>,
    pub graph: Graph,
}

impl Egonet {
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }
}

impl ProductHandle {
    /// `B` must be undirected. A directed `A` must be loop-free; its
    /// undirected statistics come from `A_u = A + A_dᵀ`.
    pub fn new(a: Graph, b: Graph) -> Result<Self> {
        b.require_undirected("the right factor of a product handle")?;
        let (a_sym_graph, directed) = if a.is_directed() {
            let parts = split_reciprocal_directed(&a)?;
            (
                Graph::undirected(parts.undirected)?,
                Some(DirectedProduct::new(&a, &b)?),
            )
        } else {
            (a.clone().without_labels(), None)
        };
        let stats = ProductStats::new(&a_sym_graph, &b)?;
        let labeled = match a.labels() {
            Some(_) if !a.is_directed() => Some(LabeledProduct::new(&a, &b)?),
            _ => None,
        };
        Ok(ProductHandle {
            index: stats.index(),
            n: stats.n(),
            a_sym: a_sym_graph.adj().clone(),
            a,
            b,
            stats,
            directed,
            labeled,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn left(&self) -> &Graph {
        &self.a
    }

    pub fn right(&self) -> &Graph {
        &self.b
    }

    pub fn index(&self) -> IndexMap {
        self.index
    }

    pub fn regime(&self) -> LoopRegime {
        self.stats.regime()
    }

    pub fn stats(&self) -> &ProductStats {
        &self.stats
    }

    pub fn directed(&self) -> Option<&DirectedProduct> {
        self.directed.as_ref()
    }

    pub fn labeled(&self) -> Option<&LabeledProduct> {
        self.labeled.as_ref()
    }

    pub fn summary(&self) -> Result<ProductSummary> {
        self.stats.summary()
    }

    /// Stored entries of `C`, `nnz(A)·nnz(B)`.
    pub fn stored_entries(&self) -> u128 {
        self.a.adj().nnz() as u128 * self.b.adj().nnz() as u128
    }

    fn locate(&self, p: u64) -> Result<(usize, usize)> {
        if p < 1 || p > self.n {
            return Err(Error::Domain(format!("product vertex {p} outside 1..={}", self.n)));
        }
        self.index.split0(p)
    }

    /// Number of entries [`stream_edges`](Self::stream_edges) emits in `All` mode.
    pub fn stream_count(&self, range: BlockRange) -> Result<u128> {
        self.check_range(range)?;
        let rows: usize = (range.lo as usize - 1..range.hi as usize)
            .map(|i| self.a.adj().row_cols(i).len())
            .sum();
        Ok(rows as u128 * self.b.adj().nnz() as u128)
    }

    fn check_range(&self, range: BlockRange) -> Result<()> {
        BlockRange::new(range.lo, range.hi, self.a.n() as u64).map(|_| ())
    }

    /// For each `A` entry `(i, j)` with `i` in the range, in row-major
    /// order, and each `B` entry `(k, l)` in row-major order, emits
    /// `(join(i, k), join(j, l))`. Returns the number of emitted entries.
    pub fn stream_edges<F>(&self, range: BlockRange, mode: EmitMode, mut sink: F) -> Result<u64>
    where
        F: FnMut(u64, u64) -> Result<()>,
    {
        self.check_range(range)?;
        let b: Vec<(usize, usize)> = self.b.adj().iter().map(|(k, l, _)| (k, l)).collect();
        let mut count = 0u64;
        for i in range.lo as usize - 1..range.hi as usize {
            for &j in self.a.adj().row_cols(i) {
                for &(k, l) in &b {
                    let p = self.index.join0(i, k);
                    let q = self.index.join0(j, l);
                    if mode == EmitMode::Canonical && p > q {
                        continue;
                    }
                    sink(p, q)?;
                    count += 1;
                }
            }
        }
        Ok(count)
    }

    fn row_neighbors(&self, a: &SparseMatrix, p: u64) -> Result<Vec<u64>> {
        let (i, k) = self.locate(p)?;
        let mut out = Vec::with_capacity(a.row_cols(i).len() * self.b.adj().row_cols(k).len());
        for &j in a.row_cols(i) {
            for &l in self.b.adj().row_cols(k) {
                let q = self.index.join0(j, l);
                if q != p {
                    out.push(q);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Out-neighbors of `p` in `C`, ascending, without `p`.
    pub fn neighbors(&self, p: u64) -> Result<Vec<u64>> {
        self.row_neighbors(self.a.adj(), p)
    }

    /// Neighbors of `p` in the undirected view of `C`.
    pub fn undirected_neighbors(&self, p: u64) -> Result<Vec<u64>> {
        self.row_neighbors(&self.a_sym, p)
    }

    fn adjacent(&self, p: u64, q: u64) -> bool {
        let (i, k) = self.index.split0(p).unwrap();
        let (j, l) = self.index.split0(q).unwrap();
        self.a_sym.position(i, j).is_some() && self.b.adj().position(k, l).is_some()
    }

    pub fn egonet(&self, p: u64) -> Result<Egonet> {
        self.egonet_with_limit(p, EGONET_LIMIT)
    }

    /// Induced subgraph on the undirected neighbors of `p`, by pairwise
    /// adjacency tests through the factors.
    pub fn egonet_with_limit(&self, p: u64, limit: usize) -> Result<Egonet> {
        let members = self.undirected_neighbors(p)?;
        if members.len() > limit {
            return Err(Error::TooLarge(format!(
                "egonet of {p} has {} vertices, limit is {limit}",
                members.len()
            )));
        }
        let mut edges = Vec::new();
        for (x, &q) in members.iter().enumerate() {
            for (y, &r) in members.iter().enumerate().skip(x + 1) {
                if self.adjacent(q, r) {
                    edges.push((x, y));
                }
            }
        }
        let graph = Graph::from_edges(members.len(), &edges, false)?;
        Ok(Egonet {
            center: p,
            members,
            graph,
        })
    }

    pub fn vertex_ground_truth(&self, p: u64) -> Result<VertexRecord> {
        let (block, intra) = self.index.split(p)?;
        self.locate(p)?;
        let directed = match &self.directed {
            Some(d) => Some(
                d.vertex_profile(p)?
                    .into_iter()
                    .filter(|&(_, v)| v > 0)
                    .map(|(t, v)| (t.code().to_string(), v))
                    .collect(),
            ),
            None => None,
        };
        let (label, labeled) = match &self.labeled {
            Some(l) => (
                Some(l.label_of(p)?),
                Some(
                    l.vertex_profile(p)?
                        .into_iter()
                        .map(|(t, v)| (t.to_string(), v))
                        .collect(),
                ),
            ),
            None => (None, None),
        };
        Ok(VertexRecord {
            vertex: p,
            block,
            intra,
            label,
            degree: self.stats.degree(p)?,
            triangles: self.stats.tri_vertex(p)?,
            directed,
            labeled,
        })
    }

    pub fn edge_ground_truth(&self, p: u64, q: u64) -> Result<EdgeRecord> {
        let (i, k) = self.locate(p)?;
        let (j, l) = self.locate(q)?;
        let present = p != q && self.a.has_edge(i, j) && self.b.has_edge(k, l);
        let directed = match &self.directed {
            Some(d) => Some(
                d.edge_profile(p, q)?
                    .into_iter()
                    .filter(|&(_, v)| v > 0)
                    .map(|(t, v)| (t.code().to_string(), v))
                    .collect(),
            ),
            None => None,
        };
        let labeled = match &self.labeled {
            Some(lp) => Some(
                lp.edge_profile(p, q)?
                    .into_iter()
                    .map(|(t, v)| (t.to_string(), v))
                    .collect(),
            ),
            None => None,
        };
        Ok(EdgeRecord {
            source: p,
            target: q,
            present,
            triangles: if p == q { 0 } else { self.stats.tri_edge(p, q)? },
            directed,
            labeled,
        })
    }
}
