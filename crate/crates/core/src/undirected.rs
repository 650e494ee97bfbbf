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

//! Exact triangle participation at the vertices and edges of an undirected
//! graph.
//!
//! The fast path orients every edge from lower to higher `(degree, id)` rank
//! and intersects forward neighbor lists, so each triangle is found exactly
//! once and then credited to its three vertices and three edges. The matrix
//! path evaluates `½ diag(H³)` and `H ∘ H²` on the hollow adjacency `H` and
//! exists to cross-check the fast path.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sparse::SparseMatrix;

/// Triangle participation of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleStats {
    /// `t_i`: triangles containing vertex `i`.
    pub per_vertex: Vec<u64>,
    /// `Δ_ij`: triangles containing edge `(i, j)`. Only edges that lie in at
    /// least one triangle are stored; every other position reads as zero.
    pub per_edge: SparseMatrix,
    /// `τ`: number of triangles.
    pub total: u64,
}

impl TriangleStats {
    /// Largest per-edge count, `max Δ`.
    pub fn max_edge_count(&self) -> u64 {
        self.per_edge.values().iter().copied().max().unwrap_or(0)
    }
}

/// Triangle statistics via degree-ordered wedge intersection.
pub fn triangle_stats(g: &Graph) -> Result<TriangleStats> {
    g.require_undirected("triangle counting")?;
    let hollow = g.adj().strip_loops().0;
    let n = hollow.dim();

    let rank_key = |u: usize| (hollow.row_cols(u).len(), u);
    let forward: Vec<Vec<usize>> = (0..n)
        .map(|u| {
            hollow
                .row_cols(u)
                .iter()
                .copied()
                .filter(|&v| rank_key(v) > rank_key(u))
                .collect()
        })
        .collect();

    let mut per_vertex = vec![0u64; n];
    let mut edge_counts = vec![0u64; hollow.nnz()];
    let mut found = 0u64;
    let mut credit = |a: usize, b: usize| {
        let ab = hollow.position(a, b).expect("triangle edge is stored");
        let ba = hollow.position(b, a).expect("triangle edge is stored");
        edge_counts[ab] += 1;
        edge_counts[ba] += 1;
    };
    for u in 0..n {
        let fu = &forward[u];
        for &v in fu {
            let fv = &forward[v];
            let (mut x, mut y) = (0, 0);
            while x < fu.len() && y < fv.len() {
                match fu[x].cmp(&fv[y]) {
                    std::cmp::Ordering::Less => x += 1,
                    std::cmp::Ordering::Greater => y += 1,
                    std::cmp::Ordering::Equal => {
                        let w = fu[x];
                        per_vertex[u] += 1;
                        per_vertex[v] += 1;
                        per_vertex[w] += 1;
                        credit(u, v);
                        credit(u, w);
                        credit(v, w);
                        found += 1;
                        x += 1;
                        y += 1;
                    }
                }
            }
        }
    }
    let per_edge = hollow.with_values(edge_counts);
    let total = total_from_vertices(&per_vertex)?;
    if total != found {
        return Err(Error::Consistency(format!(
            "enumerated {found} triangles but vertex counts imply {total}"
        )));
    }
    Ok(TriangleStats {
        per_vertex,
        per_edge,
        total,
    })
}

/// Triangle statistics via the matrix identities on the hollow adjacency.
pub fn matrix_triangle_stats(g: &Graph) -> Result<TriangleStats> {
    g.require_undirected("triangle counting")?;
    let hollow = g.adj().strip_loops().0;
    let square = hollow.mat_mul(&hollow)?;
    let cube_diag = SparseMatrix::diag_of_product(&square, &hollow)?;
    let per_vertex = cube_diag
        .iter()
        .map(|&c| half(c, "diag(H^3)"))
        .collect::<Result<Vec<_>>>()?;
    let per_edge = hollow.hadamard(&square)?;
    let total = total_from_vertices(&per_vertex)?;
    Ok(TriangleStats {
        per_vertex,
        per_edge,
        total,
    })
}

pub fn triangle_vertex_counts(g: &Graph) -> Result<Vec<u64>> {
    Ok(triangle_stats(g)?.per_vertex)
}

pub fn triangle_edge_counts(g: &Graph) -> Result<SparseMatrix> {
    Ok(triangle_stats(g)?.per_edge)
}

pub fn triangle_total(g: &Graph) -> Result<u64> {
    Ok(triangle_stats(g)?.total)
}

/// `τ = ⅓ Σ t_i`.
pub fn total_from_vertices(per_vertex: &[u64]) -> Result<u64> {
    let sum = per_vertex
        .iter()
        .try_fold(0u64, |acc, &t| acc.checked_add(t))
        .ok_or(Error::Overflow("triangle total"))?;
    if sum % 3 != 0 {
        return Err(Error::Consistency(format!(
            "vertex triangle counts sum to {sum}, which is not divisible by 3"
        )));
    }
    Ok(sum / 3)
}

pub(crate) fn half(x: u64, what: &str) -> Result<u64> {
    if x % 2 != 0 {
        return Err(Error::Consistency(format!("{what} entry {x} is odd")));
    }
    Ok(x / 2)
}

/// Local clustering coefficients `t_i / C(d_i, 2)` as exact rationals; zero
/// for vertices of degree below two. Self loops are ignored.
pub fn clustering_coefficients(g: &Graph) -> Result<Vec<Ratio<u64>>> {
    let t = triangle_vertex_counts(g)?;
    Ok((0..g.n())
        .map(|u| {
            let d = g.degree(u) as u64;
            if d < 2 {
                Ratio::from_integer(0)
            } else {
                Ratio::new(t[u], d * (d - 1) / 2)
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{gen_er, make_clique, make_hub_cycle, RngSeed};

    #[test]
    fn clique_counts() {
        let k5 = make_clique(5, false).unwrap();
        let stats = triangle_stats(&k5).unwrap();
        assert_eq!(stats.per_vertex, vec![6; 5]);
        assert_eq!(stats.total, 10);
        let k4 = triangle_edge_counts(&make_clique(4, false).unwrap()).unwrap();
        assert!(k4.values().iter().all(|&v| v == 2));
        assert_eq!(k4.nnz(), 12);
    }

    #[test]
    fn path_and_tree_have_none() {
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)], false).unwrap();
        assert_eq!(triangle_vertex_counts(&path).unwrap(), vec![0, 0, 0]);
        let tree = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5)], false).unwrap();
        assert_eq!(triangle_edge_counts(&tree).unwrap().nnz(), 0);
        assert_eq!(triangle_total(&Graph::from_edges(4, &[], false).unwrap()).unwrap(), 0);
    }

    #[test]
    fn hub_cycle_counts() {
        let g = make_hub_cycle();
        let stats = triangle_stats(&g).unwrap();
        assert_eq!(stats.total, 4);
        for (u, v, c) in stats.per_edge.iter() {
            let expect = if u == 0 || v == 0 { 2 } else { 1 };
            assert_eq!(c, expect, "edge ({}, {})", u + 1, v + 1);
        }
        assert_eq!(stats.per_edge.nnz(), 16);
    }

    #[test]
    fn matrix_route_matches_wedge_route() {
        for seed in 0..20 {
            let g = gen_er(14, 0.45, RngSeed(seed), false, seed % 2 == 0).unwrap();
            let fast = triangle_stats(&g).unwrap();
            let slow = matrix_triangle_stats(&g).unwrap();
            assert_eq!(fast, slow, "seed {seed}");
        }
    }

    #[test]
    fn loops_do_not_change_counts() {
        let g = gen_er(12, 0.4, RngSeed(3), false, false).unwrap();
        let looped = g.with_all_loops();
        assert_eq!(triangle_stats(&g).unwrap(), triangle_stats(&looped).unwrap());
    }

    #[test]
    fn vertex_counts_are_half_edge_row_sums() {
        let g = gen_er(15, 0.5, RngSeed(11), false, false).unwrap();
        let stats = triangle_stats(&g).unwrap();
        let sums = stats.per_edge.row_sums().unwrap();
        let halves: Vec<u64> = sums.iter().map(|s| s / 2).collect();
        assert!(sums.iter().all(|s| s % 2 == 0));
        assert_eq!(halves, stats.per_vertex);
    }

    #[test]
    fn directed_input_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)], true).unwrap();
        assert!(matches!(triangle_stats(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn clustering_examples() {
        let k4 = make_clique(4, false).unwrap();
        assert!(clustering_coefficients(&k4)
            .unwrap()
            .iter()
            .all(|c| *c == Ratio::from_integer(1)));
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], false).unwrap();
        assert!(clustering_coefficients(&star)
            .unwrap()
            .iter()
            .all(|c| *c == Ratio::from_integer(0)));
        let hub = clustering_coefficients(&make_hub_cycle()).unwrap();
        assert_eq!(hub[0], Ratio::new(2, 3));
        assert_eq!(hub[1], Ratio::new(2, 3));
    }
}
