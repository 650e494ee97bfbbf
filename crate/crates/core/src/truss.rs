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

//! Truss decomposition by peeling, and its Kronecker form when every edge of
//! the right factor lies in at most one triangle.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sparse::{IndexMap, MaterializeGuard, SparseMatrix};
use crate::undirected::{triangle_edge_counts, triangle_stats};

/// Trussness of every edge: the largest `κ` whose `κ`-truss contains it, with
/// 2 for edges in no triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrussDecomposition {
    n: usize,
    edges: Vec<(usize, usize)>,
    trussness: Vec<u32>,
    ids: SparseMatrix,
}

impl TrussDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn values(&self) -> &[u32] {
        &self.trussness
    }

    pub fn trussness(&self, u: usize, v: usize) -> Option<u32> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let (a, b) = (u.min(v), u.max(v));
        self.ids
            .position(a, b)
            .map(|pos| self.trussness[self.ids.values()[pos] as usize - 1])
    }

    pub fn max_trussness(&self) -> u32 {
        self.trussness.iter().copied().max().unwrap_or(2)
    }

    /// `T^(κ)`.
    pub fn level(&self, kappa: u32) -> Vec<(usize, usize)> {
        self.edges
            .iter()
            .zip(&self.trussness)
            .filter(|(_, &t)| t >= kappa)
            .map(|(&e, _)| e)
            .collect()
    }

    /// `|T^(κ)|` for `κ = 3 ..= max + 1`.
    pub fn sizes(&self) -> BTreeMap<u32, usize> {
        (3..=self.max_trussness().max(2) + 1)
            .map(|k| (k, self.trussness.iter().filter(|&&t| t >= k).count()))
            .collect()
    }

    /// Connected components of `T^(κ)`, each as a sorted edge list.
    pub fn components(&self, kappa: u32) -> Vec<Vec<(usize, usize)>> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let level = self.level(kappa);
        for &(u, v) in &level {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
        let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for &(u, v) in &level {
            let root = find(&mut parent, u);
            groups.entry(root).or_default().push((u, v));
        }
        let mut out: Vec<_> = groups.into_values().collect();
        out.sort();
        out
    }
}

/// Peels edges with support below `κ − 2` for `κ = 3, 4, …`, maintaining
/// supports incrementally.
pub fn truss_decompose(g: &Graph) -> Result<TrussDecomposition> {
    g.require_undirected("truss decomposition")?;
    g.require_loop_free("truss decomposition")?;
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.undirected_edges().collect();
    // Stored as edge id + 1 so that no value is zero.
    let ids = g.adj().with_values(
        g.adj()
            .iter()
            .map(|(u, v, _)| edges.binary_search(&(u.min(v), u.max(v))).unwrap() as u64 + 1)
            .collect(),
    );
    let edge_id = |u: usize, v: usize| -> usize { ids.values()[ids.position(u, v).unwrap()] as usize - 1 };
    let support_m = triangle_edge_counts(g)?;
    let mut support: Vec<u64> = edges.iter().map(|&(u, v)| support_m.get(u, v)).collect();
    let mut alive = vec![true; edges.len()];
    let mut trussness = vec![2u32; edges.len()];
    let mut remaining = edges.len();
    let mut kappa = 3u32;
    while remaining > 0 {
        let threshold = (kappa - 2) as u64;
        let mut stack: Vec<usize> = (0..edges.len())
            .filter(|&e| alive[e] && support[e] < threshold)
            .collect();
        let mut queued = vec![false; edges.len()];
        for &e in &stack {
            queued[e] = true;
        }
        while let Some(e) = stack.pop() {
            let (u, v) = edges[e];
            alive[e] = false;
            remaining -= 1;
            trussness[e] = kappa - 1;
            let (nu, nv) = (g.neighbors(u), g.neighbors(v));
            let (mut a, mut b) = (0, 0);
            while a < nu.len() && b < nv.len() {
                match nu[a].cmp(&nv[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        let w = nu[a];
                        let (eu, ev) = (edge_id(u, w), edge_id(v, w));
                        if alive[eu] && alive[ev] {
                            for f in [eu, ev] {
                                support[f] -= 1;
                                if support[f] < threshold && !queued[f] {
                                    queued[f] = true;
                                    stack.push(f);
                                }
                            }
                        }
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
        kappa += 1;
    }
    Ok(TrussDecomposition {
        n,
        edges,
        trussness,
        ids: ids.filter(|u, v| u < v),
    })
}

/// Trussness of `C = A ⊗ B` from the decomposition of `A` when `Δ_B ≤ 1`:
/// an edge keeps the trussness of its `A`-part when its `B`-part lies in a
/// triangle, and is 2 otherwise.
#[derive(Clone, Debug)]
pub struct ProductTruss {
    a: TrussDecomposition,
    b_adj: SparseMatrix,
    b_delta: SparseMatrix,
    b_triangle_edges: u64,
    index: IndexMap,
    n: u64,
}

impl ProductTruss {
    pub fn new(a: &Graph, b: &Graph) -> Result<Self> {
        b.require_undirected("product truss")?;
        b.require_loop_free("product truss")?;
        let decomposition = truss_decompose(a)?;
        let b_delta = triangle_edge_counts(b)?;
        if let Some((k, l, v)) = b_delta.iter().find(|&(_, _, v)| v > 1) {
            return Err(Error::Precondition(format!(
                "right factor edge ({}, {}) lies in {v} triangles; the product truss needs at most one",
                k + 1,
                l + 1
            )));
        }
        let n = (a.n() as u64)
            .checked_mul(b.n() as u64)
            .filter(|&n| n < (1u64 << 63))
            .ok_or(Error::Overflow("product vertex count"))?;
        Ok(ProductTruss {
            a: decomposition,
            b_adj: b.adj().clone(),
            b_triangle_edges: b_delta.nnz() as u64 / 2,
            b_delta,
            index: IndexMap::new(b.n().max(1) as u64)?,
            n,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn left(&self) -> &TrussDecomposition {
        &self.a
    }

    /// Trussness of the product edge `(p, q)` (1-based), `None` if absent.
    pub fn trussness(&self, p: u64, q: u64) -> Result<Option<u32>> {
        for x in [p, q] {
            if x < 1 || x > self.n {
                return Err(Error::Domain(format!("product vertex {x} outside 1..={}", self.n)));
            }
        }
        let (i, k) = self.index.split0(p)?;
        let (j, l) = self.index.split0(q)?;
        if self.b_adj.get(k, l) == 0 {
            return Ok(None);
        }
        Ok(self
            .a
            .trussness(i, j)
            .map(|t| if self.b_delta.get(k, l) == 1 { t } else { 2 }))
    }

    /// `|T_C^(κ)| = 2 |T_A^(κ)| |T_B^(3)|` for `κ ≥ 3`.
    pub fn level_size(&self, kappa: u32) -> u128 {
        if kappa < 3 {
            return 0;
        }
        2 * self.a.level(kappa).len() as u128 * self.b_triangle_edges as u128
    }

    /// Every product edge `(p, q)`, `p < q`, with its trussness.
    pub fn materialize(&self, guard: &MaterializeGuard) -> Result<Vec<(u64, u64, u32)>> {
        let entries = 2 * self.a.edges().len() as u128 * self.b_adj.nnz() as u128;
        guard.check(self.n as u128, entries)?;
        let mut out = Vec::new();
        for &(i, j) in self.a.edges() {
            let t = self.a.trussness(i, j).unwrap();
            for (k, l, _) in self.b_adj.iter() {
                let p = self.index.join0(i, k);
                let q = self.index.join0(j, l);
                let value = if self.b_delta.get(k, l) == 1 { t } else { 2 };
                out.push((p.min(q), p.max(q), value));
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}

pub fn product_truss(a: &Graph, b: &Graph) -> Result<ProductTruss> {
    ProductTruss::new(a, b)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: u64,
    pub edge_triangle_histogram: BTreeMap<u64, usize>,
    pub truss_sizes: BTreeMap<u32, usize>,
}

/// Materializes hub-cycle ⊗ hub-cycle and decomposes it directly.
pub fn verify_counterexample() -> Result<CounterexampleReport> {
    let a = crate::factor::make_hub_cycle();
    let c = Graph::undirected(a.adj().kron(a.adj(), &MaterializeGuard::default())?)?;
    let stats = triangle_stats(&c)?;
    let mut histogram = BTreeMap::new();
    for (u, v) in c.undirected_edges() {
        *histogram.entry(stats.per_edge.get(u, v)).or_insert(0) += 1;
    }
    let decomposition = truss_decompose(&c)?;
    let truss_sizes = (3..=5).map(|k| (k, decomposition.level(k).len())).collect();
    Ok(CounterexampleReport {
        vertices: c.n(),
        edges: c.edge_count(),
        triangles: stats.total,
        edge_triangle_histogram: histogram,
        truss_sizes,
    })
}
