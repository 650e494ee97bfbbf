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

//! Degree and triangle statistics of `C = A ⊗ B` evaluated from factor
//! statistics, for undirected factors in each self-loop regime.
//!
//! Nothing here allocates `O(n_C)` memory: vertex and edge queries are
//! pointwise, and aggregate totals come from sums of factor vectors. The
//! formulas, with `s` the loop indicator, `D = I ∘ A`, `d` the loop-free
//! degree and `t`/`Δ` the loop-free triangle participations, are
//!
//! | regime | `t_C` | `Δ_C` |
//! |---|---|---|
//! | no loops | `2 t_A ⊗ t_B` | `Δ_A ⊗ Δ_B` |
//! | loops in `B` only | `t_A ⊗ diag(B³)` | `Δ_A ⊗ (B ∘ B²)` |
//! | loops in both | four-term expansion (see [`ProductStats::tri_vertex`]) | five-term expansion |
//!
//! Factor quantities such as `diag(A³)` are assembled from `t`, `d`, `s` and
//! `Δ` through exact identities of boolean symmetric matrices, e.g.
//! `diag(A³)_i = 2 t_i + 2 s_i d_i + Σ_{j ~ i} s_j + s_i`; the unit tests
//! check each identity against explicit matrix products.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sparse::{IndexMap, MaterializeGuard, SparseMatrix};
use crate::undirected::triangle_stats;

/// Which factors carry self loops. Always derived from the factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LoopRegime {
    None,
    BOnly,
    Both,
}

impl LoopRegime {
    pub fn from_loops(a_has_loops: bool, b_has_loops: bool) -> Result<Self> {
        match (a_has_loops, b_has_loops) {
            (false, false) => Ok(LoopRegime::None),
            (false, true) => Ok(LoopRegime::BOnly),
            (true, true) => Ok(LoopRegime::Both),
            (true, false) => Err(Error::Precondition(
                "the left factor has self loops but the right one does not; \
                 swap the factors (B ⊗ A is A ⊗ B up to vertex relabeling)"
                    .into(),
            )),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LoopRegime::None => "none",
            LoopRegime::BOnly => "b_only",
            LoopRegime::Both => "both",
        }
    }
}

/// Per-vertex statistics of one factor with a symmetric adjacency matrix.
#[derive(Clone, Debug)]
pub struct FactorStats {
    adj: SparseMatrix,
    loops: Vec<u64>,
    degree: Vec<u64>,
    tri: Vec<u64>,
    delta: SparseMatrix,
    looped_neighbors: Vec<u64>,
    triangles: u64,
}

impl FactorStats {
    /// Requires a symmetric adjacency matrix; the directedness flag is not
    /// consulted so that directed-typed products can reuse these stats.
    pub fn new(g: &Graph) -> Result<Self> {
        if !g.adj().is_symmetric() {
            return Err(Error::Precondition("factor adjacency must be symmetric".into()));
        }
        let adj = g.adj().clone();
        let sym = if g.is_directed() {
            Graph::undirected(adj.clone())?
        } else {
            g.clone().without_labels()
        };
        let stats = triangle_stats(&sym)?;
        let n = g.n();
        let loops: Vec<u64> = (0..n).map(|u| u64::from(g.has_loop(u))).collect();
        let degree = (0..n).map(|u| g.degree(u) as u64).collect();
        let looped_neighbors = (0..n)
            .map(|u| g.neighbors(u).iter().filter(|&&v| v != u).map(|&v| loops[v]).sum())
            .collect();
        Ok(FactorStats {
            adj,
            loops,
            degree,
            tri: stats.per_vertex,
            delta: stats.per_edge,
            looped_neighbors,
            triangles: stats.total,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.dim()
    }

    pub fn adj(&self) -> &SparseMatrix {
        &self.adj
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&s| s == 1)
    }

    pub fn loop_indicator(&self, i: usize) -> u64 {
        self.loops[i]
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degree[i]
    }

    /// Loop-free triangle participation `t_i`.
    pub fn tri(&self, i: usize) -> u64 {
        self.tri[i]
    }

    pub fn tri_vector(&self) -> &[u64] {
        &self.tri
    }

    /// Loop-free edge participation `Δ_ij`.
    pub fn delta(&self, i: usize, j: usize) -> u64 {
        self.delta.get(i, j)
    }

    pub fn delta_matrix(&self) -> &SparseMatrix {
        &self.delta
    }

    pub fn triangles(&self) -> u64 {
        self.triangles
    }

    /// `(A²)_ii = d_i + s_i`.
    pub fn square_diag(&self, i: usize) -> u64 {
        self.degree[i] + self.loops[i]
    }

    /// `diag(A³)_i = 2 t_i + 2 s_i d_i + Σ_{j ~ i, j ≠ i} s_j + s_i`.
    pub fn cube_diag(&self, i: usize) -> u64 {
        let s = self.loops[i];
        2 * self.tri[i] + 2 * s * self.degree[i] + self.looped_neighbors[i] + s
    }

    /// `diag(A² D_A)_i = s_i (d_i + 1)`.
    pub fn square_loop_diag(&self, i: usize) -> u64 {
        self.loops[i] * (self.degree[i] + 1)
    }

    /// `diag(A D_A A)_i = Σ_{j ~ i, j ≠ i} s_j + s_i`.
    pub fn loop_between_diag(&self, i: usize) -> u64 {
        self.looped_neighbors[i] + self.loops[i]
    }

    /// `(A ∘ A²)_ij`: `Δ_ij + s_i + s_j` on an edge, `s_i (d_i + 1)` on the
    /// diagonal, zero elsewhere.
    pub fn hadamard_square(&self, i: usize, j: usize) -> u64 {
        if i == j {
            self.square_loop_diag(i)
        } else if self.adj.position(i, j).is_some() {
            self.delta(i, j) + self.loops[i] + self.loops[j]
        } else {
            0
        }
    }

    /// `B ∘ B²` as an explicit matrix.
    pub fn hadamard_square_matrix(&self) -> SparseMatrix {
        let vals = self.adj.iter().map(|(i, j, _)| self.hadamard_square(i, j)).collect();
        self.adj.with_values(vals)
    }

    pub fn cube_diag_vector(&self) -> Vec<u64> {
        (0..self.n()).map(|i| self.cube_diag(i)).collect()
    }

    pub fn summary(&self) -> FactorSummary {
        let n = self.n();
        let sum = |f: &dyn Fn(usize) -> u64| (0..n).map(|i| f(i) as u128).sum::<u128>();
        FactorSummary {
            vertices: n as u64,
            stored_entries: self.adj.nnz() as u64,
            loops: self.loops.iter().sum(),
            triangles: self.triangles,
            sum_cube_diag: sum(&|i| self.cube_diag(i)),
            sum_square_loop_diag: sum(&|i| self.square_loop_diag(i)),
            sum_loop_between_diag: sum(&|i| self.loop_between_diag(i)),
        }
    }
}

/// Aggregate factor quantities, sufficient for every product total.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorSummary {
    pub vertices: u64,
    pub stored_entries: u64,
    pub loops: u64,
    pub triangles: u64,
    #[serde(with = "wide")]
    pub sum_cube_diag: u128,
    #[serde(with = "wide")]
    pub sum_square_loop_diag: u128,
    #[serde(with = "wide")]
    pub sum_loop_between_diag: u128,
}

impl FactorSummary {
    /// Summary of a loop-free undirected graph with `n` vertices, `m` edges
    /// and `τ` triangles.
    pub fn loop_free(n: u64, m: u64, triangles: u64) -> Self {
        FactorSummary {
            vertices: n,
            stored_entries: 2 * m,
            loops: 0,
            triangles,
            sum_cube_diag: 6 * triangles as u128,
            sum_square_loop_diag: 0,
            sum_loop_between_diag: 0,
        }
    }

    /// Summary of `A + I` for a loop-free `A` with this summary:
    /// `Σ diag((A+I)³) = 6τ + 6m + n`, `Σ diag((A+I)² I) = 2m + n`,
    /// `Σ diag((A+I) I (A+I)) = 2m + n`.
    pub fn add_identity(&self) -> Result<Self> {
        if self.loops != 0 {
            return Err(Error::Precondition("add_identity needs a loop-free summary".into()));
        }
        let n = self.vertices as u128;
        let two_m = self.stored_entries as u128;
        Ok(FactorSummary {
            vertices: self.vertices,
            stored_entries: self.stored_entries + self.vertices,
            loops: self.vertices,
            triangles: self.triangles,
            sum_cube_diag: 6 * self.triangles as u128 + 3 * two_m + n,
            sum_square_loop_diag: two_m + n,
            sum_loop_between_diag: two_m + n,
        })
    }

    pub fn edges(&self) -> u64 {
        (self.stored_entries - self.loops) / 2 + self.loops
    }
}

/// Vertex, edge and triangle totals of a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductSummary {
    pub regime: LoopRegime,
    #[serde(with = "wide")]
    pub vertices: u64,
    #[serde(with = "wide")]
    pub stored_entries: u128,
    #[serde(with = "wide")]
    pub loops: u128,
    #[serde(with = "wide")]
    pub edges: u128,
    #[serde(with = "wide")]
    pub triangles: u128,
}

impl ProductSummary {
    pub fn from_factors(a: &FactorSummary, b: &FactorSummary) -> Result<Self> {
        let regime = LoopRegime::from_loops(a.loops > 0, b.loops > 0)?;
        let vertices = a
            .vertices
            .checked_mul(b.vertices)
            .filter(|&n| n < (1u64 << 63))
            .ok_or(Error::Overflow("product vertex count"))?;
        let stored_entries = a.stored_entries as u128 * b.stored_entries as u128;
        let loops = a.loops as u128 * b.loops as u128;
        let edges = (stored_entries - loops) / 2 + loops;
        let triangles = match regime {
            LoopRegime::None => 6 * a.triangles as u128 * b.triangles as u128,
            LoopRegime::BOnly => a.triangles as u128 * b.sum_cube_diag,
            LoopRegime::Both => {
                let mul = |x: u128, y: u128| x.checked_mul(y).ok_or(Error::Overflow("triangle total"));
                let plus = mul(a.sum_cube_diag, b.sum_cube_diag)? + 2 * a.loops as u128 * b.loops as u128;
                let minus = 2 * mul(a.sum_square_loop_diag, b.sum_square_loop_diag)?
                    + mul(a.sum_loop_between_diag, b.sum_loop_between_diag)?;
                let twice_sum = plus.checked_sub(minus).ok_or_else(|| {
                    Error::Consistency("negative vertex triangle sum in the both-loops expansion".into())
                })?;
                if twice_sum % 6 != 0 {
                    return Err(Error::Consistency(format!(
                        "2·Σ t_C = {twice_sum} is not divisible by 6"
                    )));
                }
                twice_sum / 6
            }
        };
        Ok(ProductSummary {
            regime,
            vertices,
            stored_entries,
            loops,
            edges,
            triangles,
        })
    }
}

/// Implicit degree and triangle statistics of `C = A ⊗ B`.
#[derive(Clone, Debug)]
pub struct ProductStats {
    a: FactorStats,
    b: FactorStats,
    regime: LoopRegime,
    index: IndexMap,
    n: u64,
}

impl ProductStats {
    pub fn new(a: &Graph, b: &Graph) -> Result<Self> {
        a.require_undirected("product statistics")?;
        b.require_undirected("product statistics")?;
        Self::from_factor_stats(FactorStats::new(a)?, FactorStats::new(b)?)
    }

    pub fn from_factor_stats(a: FactorStats, b: FactorStats) -> Result<Self> {
        let regime = LoopRegime::from_loops(a.has_loops(), b.has_loops())?;
        let n = (a.n() as u64)
            .checked_mul(b.n() as u64)
            .filter(|&n| n < (1u64 << 63))
            .ok_or(Error::Overflow("product vertex count"))?;
        let index = IndexMap::new(b.n().max(1) as u64)?;
        Ok(ProductStats { a, b, regime, index, n })
    }

    pub fn regime(&self) -> LoopRegime {
        self.regime
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn index(&self) -> IndexMap {
        self.index
    }

    pub fn left(&self) -> &FactorStats {
        &self.a
    }

    pub fn right(&self) -> &FactorStats {
        &self.b
    }

    fn locate(&self, p: u64) -> Result<(usize, usize)> {
        if p < 1 || p > self.n {
            return Err(Error::Domain(format!("product vertex {p} outside 1..={}", self.n)));
        }
        self.index.split0(p)
    }

    /// Loop-free degree of product vertex `p` (1-based):
    /// `(d_A + s_A)_i (d_B + s_B)_k − (s_A)_i (s_B)_k`.
    pub fn degree(&self, p: u64) -> Result<u64> {
        let (i, k) = self.locate(p)?;
        let (a, b) = (&self.a, &self.b);
        let full = (a.degree(i) + a.loop_indicator(i)) as u128 * (b.degree(k) + b.loop_indicator(k)) as u128;
        let loops = (a.loop_indicator(i) * b.loop_indicator(k)) as u128;
        Ok((full - loops) as u64)
    }

    /// Triangles containing product vertex `p`.
    ///
    /// With loops in both factors this is
    /// `½ (diag(A³)⊗diag(B³) − 2 diag(A²D_A)⊗diag(B²D_B) − diag(AD_AA)⊗diag(BD_BB) + 2 diag(D_A)⊗diag(D_B))`.
    pub fn tri_vertex(&self, p: u64) -> Result<u128> {
        let (i, k) = self.locate(p)?;
        let (a, b) = (&self.a, &self.b);
        let w = |x: u64| x as u128;
        Ok(match self.regime {
            LoopRegime::None => 2 * w(a.tri(i)) * w(b.tri(k)),
            LoopRegime::BOnly => w(a.tri(i)) * w(b.cube_diag(k)),
            LoopRegime::Both => {
                let plus = w(a.cube_diag(i)) * w(b.cube_diag(k)) + 2 * w(a.loop_indicator(i)) * w(b.loop_indicator(k));
                let minus = 2 * w(a.square_loop_diag(i)) * w(b.square_loop_diag(k))
                    + w(a.loop_between_diag(i)) * w(b.loop_between_diag(k));
                let twice = plus
                    .checked_sub(minus)
                    .ok_or_else(|| Error::Consistency(format!("negative triangle count at product vertex {p}")))?;
                if twice % 2 != 0 {
                    return Err(Error::Consistency(format!("odd double count at product vertex {p}")));
                }
                twice / 2
            }
        })
    }

    /// Triangles containing the product edge `(p, q)`; zero when `(p, q)` is
    /// not an edge or is a loop.
    ///
    /// With loops in both factors this is
    /// `(A∘A²)⊗(B∘B²) − (D_A A)⊗(D_B B) − (A D_A)⊗(B D_B) + 2 D_A⊗D_B − (D_A∘A²)⊗(D_B∘B²)`.
    pub fn tri_edge(&self, p: u64, q: u64) -> Result<u128> {
        let (i, k) = self.locate(p)?;
        let (j, l) = self.locate(q)?;
        let (a, b) = (&self.a, &self.b);
        let w = |x: u64| x as i128;
        let value = match self.regime {
            LoopRegime::None => w(a.delta(i, j)) * w(b.delta(k, l)),
            LoopRegime::BOnly => w(a.delta(i, j)) * w(b.hadamard_square(k, l)),
            LoopRegime::Both => {
                let a_ij = w(a.adj().get(i, j));
                let b_kl = w(b.adj().get(k, l));
                let (si, sj) = (w(a.loop_indicator(i)), w(a.loop_indicator(j)));
                let (sk, sl) = (w(b.loop_indicator(k)), w(b.loop_indicator(l)));
                let diag = i128::from(i == j && k == l);
                let mut v = w(a.hadamard_square(i, j)) * w(b.hadamard_square(k, l));
                v -= (si * a_ij) * (sk * b_kl);
                v -= (a_ij * sj) * (b_kl * sl);
                v += 2 * diag * si * sk;
                v -= diag * si * w(a.square_diag(i)) * sk * w(b.square_diag(k));
                v
            }
        };
        u128::try_from(value)
            .map_err(|_| Error::Consistency(format!("negative triangle count at product edge ({p}, {q})")))
    }

    pub fn tri_total(&self) -> Result<u128> {
        Ok(self.summary()?.triangles)
    }

    pub fn summary(&self) -> Result<ProductSummary> {
        ProductSummary::from_factors(&self.a.summary(), &self.b.summary())
    }

    fn guard_vectors(&self, guard: &MaterializeGuard) -> Result<()> {
        let entries = self.a.adj().nnz() as u128 * self.b.adj().nnz() as u128;
        guard.check(self.n as u128, entries)
    }

    /// Every product degree, under the materialization guard.
    pub fn degree_vector(&self, guard: &MaterializeGuard) -> Result<Vec<u64>> {
        self.guard_vectors(guard)?;
        (1..=self.n).map(|p| self.degree(p)).collect()
    }

    pub fn tri_vertex_vector(&self, guard: &MaterializeGuard) -> Result<Vec<u128>> {
        self.guard_vectors(guard)?;
        (1..=self.n).map(|p| self.tri_vertex(p)).collect()
    }

    /// `Δ_C` on the off-diagonal stored entries of `C`, zeros dropped.
    pub fn tri_edge_matrix(&self, guard: &MaterializeGuard) -> Result<SparseMatrix> {
        self.guard_vectors(guard)?;
        let mut triplets = Vec::new();
        for (i, j, _) in self.a.adj().iter() {
            for (k, l, _) in self.b.adj().iter() {
                let (p, q) = (self.index.join0(i, k), self.index.join0(j, l));
                if p == q {
                    continue;
                }
                let v = u64::try_from(self.tri_edge(p, q)?).map_err(|_| Error::Overflow("tri_edge_matrix"))?;
                triplets.push(((p - 1) as usize, (q - 1) as usize, v));
            }
        }
        SparseMatrix::from_triplets(self.n as usize, triplets)
    }
}

pub fn product_stats(a: &Graph, b: &Graph) -> Result<ProductStats> {
    ProductStats::new(a, b)
}

/// `τ(A ⊗ B)`.
pub fn product_tri_total(a: &Graph, b: &Graph) -> Result<u128> {
    ProductStats::new(a, b)?.tri_total()
}

/// Vertex, edge, loop and triangle totals of `A ⊗ B`.
pub fn product_manifest(a: &Graph, b: &Graph) -> Result<ProductSummary> {
    ProductStats::new(a, b)?.summary()
}

/// Serializes wide integers as decimal strings.
pub(crate) mod wide {
    use std::fmt::Display;
    use std::str::FromStr;

    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{gen_er, make_clique, make_hub_cycle, RngSeed};

    fn cube(m: &SparseMatrix) -> SparseMatrix {
        m.mat_mul(m).unwrap().mat_mul(m).unwrap()
    }

    #[test]
    fn factor_identities_match_matrix_products() {
        for seed in 0..25 {
            let g = gen_er(11, 0.45, RngSeed(seed), false, true).unwrap();
            let f = FactorStats::new(&g).unwrap();
            let a = g.adj();
            let d = SparseMatrix::identity(a.dim()).hadamard(a).unwrap();
            let sq = a.mat_mul(a).unwrap();
            assert_eq!(f.cube_diag_vector(), cube(a).diag(), "seed {seed}");
            let sq_d = sq.mat_mul(&d).unwrap().diag();
            let ada = a.mat_mul(&d).unwrap().mat_mul(a).unwrap().diag();
            for i in 0..a.dim() {
                assert_eq!(f.square_loop_diag(i), sq_d[i]);
                assert_eq!(f.loop_between_diag(i), ada[i]);
                assert_eq!(f.square_diag(i), sq.get(i, i));
            }
            assert_eq!(f.hadamard_square_matrix(), a.hadamard(&sq).unwrap());
        }
    }

    #[test]
    fn clique_degrees() {
        let k4 = make_clique(4, false).unwrap();
        let s = ProductStats::new(&k4, &k4).unwrap();
        assert_eq!(s.regime(), LoopRegime::None);
        assert!((1..=16).all(|p| s.degree(p).unwrap() == 9));
        assert!((1..=16).all(|p| s.tri_vertex(p).unwrap() == 18));
        let k3 = make_clique(3, false).unwrap();
        let j2 = make_clique(2, true).unwrap();
        let s = ProductStats::new(&k3, &j2).unwrap();
        assert_eq!(s.regime(), LoopRegime::BOnly);
        assert!((1..=6).all(|p| s.degree(p).unwrap() == 4));
        assert!((1..=6).all(|p| s.tri_vertex(p).unwrap() == 4));
        let j3 = make_clique(3, true).unwrap();
        let s = ProductStats::new(&j3, &j3).unwrap();
        assert_eq!(s.regime(), LoopRegime::Both);
        assert!((1..=9).all(|p| s.degree(p).unwrap() == 8));
        assert!((1..=9).all(|p| s.tri_vertex(p).unwrap() == 28));
    }

    #[test]
    fn clique_edges() {
        let guard = MaterializeGuard::default();
        let k4 = make_clique(4, false).unwrap();
        let m = ProductStats::new(&k4, &k4).unwrap().tri_edge_matrix(&guard).unwrap();
        assert_eq!(m.nnz(), 16 * 9);
        assert!(m.values().iter().all(|&v| v == 4));
        let m = ProductStats::new(&make_clique(3, false).unwrap(), &make_clique(2, true).unwrap())
            .unwrap()
            .tri_edge_matrix(&guard)
            .unwrap();
        assert!(m.values().iter().all(|&v| v == 2));
        let j3 = make_clique(3, true).unwrap();
        let m = ProductStats::new(&j3, &j3).unwrap().tri_edge_matrix(&guard).unwrap();
        assert_eq!(m.nnz(), 9 * 8);
        assert!(m.values().iter().all(|&v| v == 7));
    }

    #[test]
    fn left_loops_only_is_rejected() {
        let j3 = make_clique(3, true).unwrap();
        let k3 = make_clique(3, false).unwrap();
        assert!(matches!(ProductStats::new(&j3, &k3), Err(Error::Precondition(_))));
    }

    #[test]
    fn totals() {
        let hub = make_hub_cycle();
        assert_eq!(product_tri_total(&hub, &hub).unwrap(), 96);
        let path = crate::graph::Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)], false).unwrap();
        assert_eq!(product_tri_total(&path, &make_clique(4, true).unwrap()).unwrap(), 0);
        let k2 = make_clique(2, false).unwrap();
        let m = product_manifest(&k2, &k2).unwrap();
        assert_eq!((m.vertices, m.edges, m.loops), (4, 2, 0));
    }

    #[test]
    fn summary_identity_step_matches_graph() {
        for seed in 0..10 {
            let g = gen_er(13, 0.35, RngSeed(seed), false, false).unwrap();
            let from_graph = FactorStats::new(&g.with_all_loops()).unwrap().summary();
            let s = FactorStats::new(&g).unwrap().summary();
            let derived = FactorSummary::loop_free(s.vertices, s.stored_entries / 2, s.triangles)
                .add_identity()
                .unwrap();
            assert_eq!(
                s,
                FactorSummary::loop_free(s.vertices, s.stored_entries / 2, s.triangles)
            );
            assert_eq!(derived, from_graph);
        }
    }

    #[test]
    fn summary_serializes_wide_values_as_strings() {
        let s = FactorSummary::loop_free(3, 3, 1);
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"sum_cube_diag\":\"6\""));
        let back: FactorSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
