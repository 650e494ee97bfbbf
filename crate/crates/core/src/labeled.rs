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

//! Label filters and label-typed triangle participation.
//!
//! Labels are 1-based. A vertex type `(q1, {q2, q3})` counts triangles at a
//! vertex of label `q1` whose other two vertices carry labels `q2` and `q3`;
//! it is stored with `q2 ≤ q3`. An edge type `(q1, q2, q3)` counts triangles
//! through an edge between a `q1` vertex and a `q2` vertex whose third vertex
//! has label `q3`; its matrix is nonzero at row = the `q2` endpoint, column =
//! the `q1` endpoint.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labels};
use crate::kron::FactorStats;
use crate::sparse::{IndexMap, SparseMatrix};
use crate::undirected::half;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LabeledTriType {
    pub q1: u32,
    pub q2: u32,
    pub q3: u32,
}

impl LabeledTriType {
    pub fn new(q1: u32, q2: u32, q3: u32) -> Self {
        LabeledTriType { q1, q2, q3 }
    }

    /// Vertex types are symmetric in the two other labels.
    pub fn vertex_canonical(&self) -> Self {
        LabeledTriType::new(self.q1, self.q2.min(self.q3), self.q2.max(self.q3))
    }

    fn check(&self, count: u32) -> Result<()> {
        for q in [self.q1, self.q2, self.q3] {
            if q == 0 || q > count {
                return Err(Error::Domain(format!("label {q} outside 1..={count}")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for LabeledTriType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.q1, self.q2, self.q3)
    }
}

/// All `L · C(L+1, 2)` vertex types.
pub fn vertex_types(count: u32) -> Vec<LabeledTriType> {
    let mut out = Vec::new();
    for q1 in 1..=count {
        for q2 in 1..=count {
            for q3 in q2..=count {
                out.push(LabeledTriType::new(q1, q2, q3));
            }
        }
    }
    out
}

/// All `L³` edge types.
pub fn edge_types(count: u32) -> Vec<LabeledTriType> {
    let mut out = Vec::new();
    for q1 in 1..=count {
        for q2 in 1..=count {
            for q3 in 1..=count {
                out.push(LabeledTriType::new(q1, q2, q3));
            }
        }
    }
    out
}

/// The diagonal projector `Π_q` as an explicit matrix.
pub fn label_filter(labels: &Labels, q: u32) -> SparseMatrix {
    let n = labels.ids().len();
    SparseMatrix::identity(n).filter(|i, _| labels.of(i) == q)
}

/// `Π_row X Π_col`.
fn project(x: &SparseMatrix, labels: &Labels, row: Option<u32>, col: Option<u32>) -> SparseMatrix {
    x.filter(|i, j| row.is_none_or(|q| labels.of(i) == q) && col.is_none_or(|q| labels.of(j) == q))
}

fn labeled_input(g: &Graph) -> Result<&Labels> {
    g.require_undirected("labeled triangle counts")?;
    g.require_loop_free("labeled triangle counts")?;
    g.labels()
        .ok_or_else(|| Error::Precondition("labeled triangle counts need vertex labels".into()))
}

/// `diag(Π_q1 A Π_q3 A Π_q2 A Π_q1)`, halved when `q2 = q3`.
pub fn labeled_vertex_counts(g: &Graph, t: LabeledTriType) -> Result<Vec<u64>> {
    let labels = labeled_input(g)?;
    t.check(labels.count())?;
    let a = g.adj();
    let x = project(a, labels, Some(t.q1), Some(t.q3));
    let y = project(a, labels, Some(t.q3), Some(t.q2));
    let z = project(a, labels, Some(t.q2), Some(t.q1));
    let diag = SparseMatrix::diag_of_triple(&x, &y, &z)?;
    if t.q2 == t.q3 {
        diag.into_iter().map(|v| half(v, "labeled vertex count")).collect()
    } else {
        Ok(diag)
    }
}

/// `(Π_q2 A Π_q1) ∘ (A Π_q3 A)`.
pub fn labeled_edge_counts(g: &Graph, t: LabeledTriType) -> Result<SparseMatrix> {
    let labels = labeled_input(g)?;
    t.check(labels.count())?;
    let a = g.adj();
    let mask = project(a, labels, Some(t.q2), Some(t.q1));
    let x = project(a, labels, None, Some(t.q3));
    let y = project(a, labels, Some(t.q3), None);
    SparseMatrix::masked_product(&mask, &x, &y)
}

/// Every vertex type with a nonzero count vector.
pub fn labeled_vertex_census(g: &Graph) -> Result<Vec<(LabeledTriType, Vec<u64>)>> {
    let count = labeled_input(g)?.count();
    let mut out = Vec::new();
    for t in vertex_types(count) {
        let v = labeled_vertex_counts(g, t)?;
        if v.iter().any(|&x| x > 0) {
            out.push((t, v));
        }
    }
    Ok(out)
}

pub fn labeled_edge_census(g: &Graph) -> Result<Vec<(LabeledTriType, SparseMatrix)>> {
    let count = labeled_input(g)?.count();
    let mut out = Vec::new();
    for t in edge_types(count) {
        let m = labeled_edge_counts(g, t)?;
        if m.nnz() > 0 {
            out.push((t, m));
        }
    }
    Ok(out)
}

/// Labeled counts of `C = A ⊗ B` with labels inherited from `A`.
#[derive(Clone, Debug)]
pub struct LabeledProduct {
    labels: Labels,
    vertex: Vec<(LabeledTriType, Vec<u64>)>,
    edge: Vec<(LabeledTriType, SparseMatrix)>,
    b: FactorStats,
    index: IndexMap,
    n: u64,
}

impl LabeledProduct {
    pub fn new(a: &Graph, b: &Graph) -> Result<Self> {
        if b.labels().is_some() {
            return Err(Error::Precondition(
                "the right factor of a labeled product must be unlabeled".into(),
            ));
        }
        b.require_undirected("labeled product")?;
        let labels = labeled_input(a)?.clone();
        let stats = FactorStats::new(b)?;
        let n = (a.n() as u64)
            .checked_mul(b.n() as u64)
            .filter(|&n| n < (1u64 << 63))
            .ok_or(Error::Overflow("product vertex count"))?;
        Ok(LabeledProduct {
            vertex: labeled_vertex_census(a)?,
            edge: labeled_edge_census(a)?,
            labels,
            index: IndexMap::new(b.n().max(1) as u64)?,
            b: stats,
            n,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn label_count(&self) -> u32 {
        self.labels.count()
    }

    fn locate(&self, p: u64) -> Result<(usize, usize)> {
        if p < 1 || p > self.n {
            return Err(Error::Domain(format!("product vertex {p} outside 1..={}", self.n)));
        }
        self.index.split0(p)
    }

    /// `f_C(p) = f_A(i(p))`.
    pub fn label_of(&self, p: u64) -> Result<u32> {
        Ok(self.labels.of(self.locate(p)?.0))
    }

    pub fn vertex(&self, t: LabeledTriType, p: u64) -> Result<u128> {
        t.check(self.labels.count())?;
        let (i, k) = self.locate(p)?;
        let t = t.vertex_canonical();
        let a = self.vertex.iter().find(|(s, _)| *s == t).map_or(0, |(_, v)| v[i]);
        Ok(a as u128 * self.b.cube_diag(k) as u128)
    }

    /// Nonzero vertex types at `p`.
    pub fn vertex_profile(&self, p: u64) -> Result<Vec<(LabeledTriType, u128)>> {
        let (i, k) = self.locate(p)?;
        let cube = self.b.cube_diag(k) as u128;
        Ok(self
            .vertex
            .iter()
            .filter(|(_, v)| v[i] > 0 && cube > 0)
            .map(|(t, v)| (*t, v[i] as u128 * cube))
            .collect())
    }

    pub fn edge(&self, t: LabeledTriType, p: u64, q: u64) -> Result<u128> {
        t.check(self.labels.count())?;
        let (i, k) = self.locate(p)?;
        let (j, l) = self.locate(q)?;
        let a = self.edge.iter().find(|(s, _)| *s == t).map_or(0, |(_, m)| m.get(i, j));
        Ok(a as u128 * self.b.hadamard_square(k, l) as u128)
    }

    pub fn edge_profile(&self, p: u64, q: u64) -> Result<Vec<(LabeledTriType, u128)>> {
        let (i, k) = self.locate(p)?;
        let (j, l) = self.locate(q)?;
        let h = self.b.hadamard_square(k, l) as u128;
        Ok(self
            .edge
            .iter()
            .filter(|(_, m)| m.get(i, j) > 0 && h > 0)
            .map(|(t, m)| (*t, m.get(i, j) as u128 * h))
            .collect())
    }
}
