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

//! Factor graph construction: canonical examples, seeded random graphs, and
//! two ways of producing factors whose edges lie in at most one triangle.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a given seed yields the same graph on every platform.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Labels};
use crate::sparse::SparseMatrix;
use crate::undirected::triangle_edge_counts;

/// Seed for the deterministic generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RngSeed(pub u64);

impl RngSeed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// `K_n` (no loops) or `J_n` (every vertex looped).
pub fn make_clique(n: usize, with_loops: bool) -> Result<Graph> {
    if n < 1 {
        return Err(Error::Domain("clique size must be at least 1".into()));
    }
    let ones = SparseMatrix::ones(n);
    let adj = if with_loops {
        ones
    } else {
        ones.checked_sub(&SparseMatrix::identity(n))?
    };
    Graph::undirected(adj)
}

/// A 4-cycle on vertices 2..5 plus a hub (vertex 1) joined to all of them.
pub fn make_hub_cycle() -> Graph {
    let edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)];
    Graph::from_edges(5, &edges, false).expect("static edge list")
}

/// Directed cycle `1 → 2 → … → n → 1`.
pub fn make_directed_cycle(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::Domain("directed cycle needs at least 2 vertices".into()));
    }
    let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
    Graph::from_edges(n, &edges, true)
}

/// Erdős–Rényi graph: every unordered pair (ordered pair when `directed`)
/// is present with probability `edge_prob`; with `loops`, every vertex also
/// gets a loop with that probability.
pub fn gen_er(n: usize, edge_prob: f64, seed: RngSeed, directed: bool, loops: bool) -> Result<Graph> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::Domain(format!("edge probability {edge_prob} outside [0, 1]")));
    }
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        if loops && rng.random_bool(edge_prob) {
            edges.push((u, u));
        }
        let start = if directed { 0 } else { u + 1 };
        for v in start..n {
            if v != u && rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges, directed)
}

/// Uniform random labels in `1..=num_labels`.
pub fn random_labels(n: usize, num_labels: u32, seed: RngSeed) -> Result<Labels> {
    if num_labels == 0 {
        return Err(Error::Domain("need at least one label".into()));
    }
    let mut rng = seed.rng();
    Labels::new((0..n).map(|_| rng.random_range(1..=num_labels)).collect(), num_labels)
}

/// Preferential-attachment generator whose edges all lie in at most one
/// triangle.
///
/// Starting from a single edge, every new vertex `u` picks an existing edge
/// `(i, j)` uniformly and attaches to a uniform endpoint `v`. If `(i, j)` is
/// in no triangle yet, `u` also attaches to the other endpoint, closing the
/// triangle `(u, i, j)`.
pub fn gen_trianglecap_pa(n_target: usize, seed: RngSeed) -> Result<Graph> {
    if n_target < 2 {
        return Err(Error::Domain("preferential attachment needs n_target >= 2".into()));
    }
    let mut rng = seed.rng();
    let mut edges: Vec<(usize, usize)> = vec![(0, 1)];
    let mut in_triangle: Vec<bool> = vec![false];
    for u in 2..n_target {
        let e = rng.random_range(0..edges.len());
        let (i, j) = edges[e];
        let (v, w) = if rng.random_bool(0.5) { (i, j) } else { (j, i) };
        edges.push((u, v));
        if in_triangle[e] {
            in_triangle.push(false);
        } else {
            edges.push((u, w));
            in_triangle[e] = true;
            in_triangle.push(true);
            in_triangle.push(true);
        }
    }
    Graph::from_edges(n_target, &edges, false)
}

/// Deletes edges of a connected, loop-free undirected graph until every
/// edge lies in at most one triangle, never touching a breadth-first
/// spanning tree rooted at vertex 1.
///
/// Each step draws a uniformly random edge that is still in two or more
/// triangles. A non-tree edge is deleted directly; a tree edge instead loses
/// one of its triangles (drawn uniformly) by deleting a non-tree edge of that
/// triangle. Triangle counts are maintained incrementally.
pub fn reduce_to_trianglecap(g: &Graph, seed: RngSeed) -> Result<Graph> {
    g.require_undirected("reduce_to_trianglecap")?;
    g.require_loop_free("reduce_to_trianglecap")?;
    if !g.is_connected() {
        return Err(Error::Precondition(
            "reduce_to_trianglecap needs a connected graph".into(),
        ));
    }
    let n = g.n();
    let tree = bfs_tree(g);
    let delta = triangle_edge_counts(g)?;

    let key = |u: usize, v: usize| if u < v { (u, v) } else { (v, u) };
    let mut adjacency: Vec<BTreeSet<usize>> = (0..n).map(|u| g.neighbors(u).iter().copied().collect()).collect();
    let mut counts: BTreeMap<(usize, usize), u64> =
        g.undirected_edges().map(|(u, v)| ((u, v), delta.get(u, v))).collect();
    let mut violating: BTreeSet<(usize, usize)> = counts.iter().filter(|(_, &c)| c >= 2).map(|(&e, _)| e).collect();
    let mut rng = seed.rng();

    while !violating.is_empty() {
        let pick = rng.random_range(0..violating.len());
        let (u, v) = *violating.iter().nth(pick).expect("index in range");
        let victim = if tree.contains(&(u, v)) {
            let common: Vec<usize> = adjacency[u].intersection(&adjacency[v]).copied().collect();
            let w = common[rng.random_range(0..common.len())];
            // At most one of the two other edges is a tree edge.
            if tree.contains(&key(u, w)) {
                key(v, w)
            } else {
                key(u, w)
            }
        } else {
            (u, v)
        };
        let (a, b) = victim;
        let common: Vec<usize> = adjacency[a].intersection(&adjacency[b]).copied().collect();
        for w in common {
            for e in [key(a, w), key(b, w)] {
                let c = counts.get_mut(&e).expect("edge present");
                *c -= 1;
                if *c < 2 {
                    violating.remove(&e);
                }
            }
        }
        adjacency[a].remove(&b);
        adjacency[b].remove(&a);
        counts.remove(&victim);
        violating.remove(&victim);
    }

    let edges: Vec<(usize, usize)> = counts.keys().copied().collect();
    Graph::from_edges(n, &edges, false)
}

fn bfs_tree(g: &Graph) -> BTreeSet<(usize, usize)> {
    let n = g.n();
    let mut tree = BTreeSet::new();
    if n == 0 {
        return tree;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                tree.insert((u.min(v), u.max(v)));
                queue.push_back(v);
            }
        }
    }
    tree
}
