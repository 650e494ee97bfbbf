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

//! Deliberately naive reference counts over a dense adjacency matrix.
//!
//! Everything here enumerates vertex triples directly and shares no code
//! with the formula paths.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_CAP: usize = 2000;

const VERTEX_CODES: [&str; 15] = [
    "ss+", "sso", "su+", "suo", "su-", "st+", "sto", "st-", "uu+", "uuo", "ut+", "uto", "ut-", "tt+", "tto",
];
const EDGE_CODES: [&str; 15] = [
    "+++", "++-", "++o", "+-+", "+--", "+-o", "+o+", "+o-", "+oo", "o++", "o+-", "o+o", "o-+", "o-o", "ooo",
];

struct Dense {
    n: usize,
    arc: Vec<bool>,
}

impl Dense {
    fn new(g: &Graph, cap: usize) -> Result<Self> {
        let n = g.n();
        if n > cap {
            return Err(Error::TooLarge(format!(
                "oracle capped at {cap} vertices, graph has {n}"
            )));
        }
        let mut arc = vec![false; n * n];
        for (u, v, _) in g.adj().iter() {
            if u != v {
                arc[u * n + v] = true;
            }
        }
        Ok(Dense { n, arc })
    }

    fn arc(&self, u: usize, v: usize) -> bool {
        self.arc[u * self.n + v]
    }

    fn linked(&self, u: usize, v: usize) -> bool {
        self.arc(u, v) || self.arc(v, u)
    }

    fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.n;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if !self.linked(i, j) {
                    continue;
                }
                for k in j + 1..n {
                    if self.linked(i, k) && self.linked(j, k) {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }

    fn role(&self, center: usize, other: usize) -> char {
        match (self.arc(center, other), self.arc(other, center)) {
            (true, true) => 'u',
            (true, false) => 's',
            _ => 't',
        }
    }

    fn orient(&self, from: usize, to: usize) -> char {
        match (self.arc(from, to), self.arc(to, from)) {
            (true, true) => 'o',
            (true, false) => '+',
            _ => '-',
        }
    }
}

fn others(tri: [usize; 3], c: usize) -> (usize, usize) {
    let rest: Vec<usize> = tri.iter().copied().filter(|&x| x != c).collect();
    (rest[0], rest[1])
}

/// Per-vertex counts, per-edge counts (both orientations) and the total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteTriangles {
    pub per_vertex: Vec<u64>,
    pub per_edge: BTreeMap<(usize, usize), u64>,
    pub total: u64,
}

pub fn brute_triangles(g: &Graph) -> Result<BruteTriangles> {
    brute_triangles_capped(g, DEFAULT_CAP)
}

/// Loops and edge directions are ignored.
pub fn brute_triangles_capped(g: &Graph, cap: usize) -> Result<BruteTriangles> {
    let d = Dense::new(g, cap)?;
    let mut per_vertex = vec![0; d.n];
    let mut per_edge = BTreeMap::new();
    let tris = d.triangles();
    for &[i, j, k] in &tris {
        for v in [i, j, k] {
            per_vertex[v] += 1;
        }
        for (u, v) in [(i, j), (i, k), (j, k)] {
            *per_edge.entry((u, v)).or_insert(0) += 1;
            *per_edge.entry((v, u)).or_insert(0) += 1;
        }
    }
    Ok(BruteTriangles {
        per_vertex,
        per_edge,
        total: tris.len() as u64,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BruteDirectedCensus {
    pub vertex: BTreeMap<String, Vec<u64>>,
    /// Keyed by the stored arc `(u, v)`.
    pub edge: BTreeMap<String, BTreeMap<(usize, usize), u64>>,
}

impl BruteDirectedCensus {
    pub fn vertex_count(&self, code: &str, v: usize) -> u64 {
        self.vertex.get(code).map_or(0, |c| c[v])
    }

    pub fn edge_count(&self, code: &str, u: usize, v: usize) -> u64 {
        self.edge.get(code).and_then(|m| m.get(&(u, v))).copied().unwrap_or(0)
    }
}

pub fn brute_directed_census(g: &Graph) -> Result<BruteDirectedCensus> {
    if (0..g.n()).any(|u| g.has_loop(u)) {
        return Err(Error::Precondition(
            "directed census oracle needs a loop-free graph".into(),
        ));
    }
    let d = Dense::new(g, DEFAULT_CAP)?;
    let mut out = BruteDirectedCensus::default();
    for code in VERTEX_CODES {
        out.vertex.insert(code.to_string(), vec![0; d.n]);
    }
    for code in EDGE_CODES {
        out.edge.insert(code.to_string(), BTreeMap::new());
    }
    for tri in d.triangles() {
        for c in tri {
            let (x, y) = others(tri, c);
            let first = format!("{}{}{}", d.role(c, x), d.role(c, y), d.orient(x, y));
            let second = format!("{}{}{}", d.role(c, y), d.role(c, x), d.orient(y, x));
            let code = [first, second]
                .into_iter()
                .find(|s| VERTEX_CODES.contains(&s.as_str()))
                .ok_or_else(|| Error::Consistency("vertex triangle without a canonical code".into()))?;
            out.vertex.get_mut(&code).unwrap()[c] += 1;
        }
        for u in tri {
            for v in tri {
                if u == v || !d.arc(u, v) {
                    continue;
                }
                let w = tri.iter().copied().find(|&w| w != u && w != v).unwrap();
                let central = if d.arc(v, u) { 'o' } else { '+' };
                let code = format!("{central}{}{}", d.orient(u, w), d.orient(w, v));
                if let Some(m) = out.edge.get_mut(&code) {
                    *m.entry((u, v)).or_insert(0) += 1;
                }
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BruteLabeledCensus {
    /// `(q1, q2, q3)` with `q2 ≤ q3`.
    pub vertex: BTreeMap<(u32, u32, u32), Vec<u64>>,
    /// Entry `(r, c)` counted under `(f(c), f(r), f(w))`.
    pub edge: BTreeMap<(u32, u32, u32), BTreeMap<(usize, usize), u64>>,
}

pub fn brute_labeled_census(g: &Graph) -> Result<BruteLabeledCensus> {
    let labels = g
        .labels()
        .ok_or_else(|| Error::Precondition("labeled census oracle needs labels".into()))?;
    let f = |v: usize| labels.ids()[v];
    let d = Dense::new(g, DEFAULT_CAP)?;
    let mut out = BruteLabeledCensus::default();
    for tri in d.triangles() {
        for c in tri {
            let (x, y) = others(tri, c);
            let key = (f(c), f(x).min(f(y)), f(x).max(f(y)));
            out.vertex.entry(key).or_insert_with(|| vec![0; d.n])[c] += 1;
        }
        for r in tri {
            for c in tri {
                if r == c {
                    continue;
                }
                let w = tri.iter().copied().find(|&w| w != r && w != c).unwrap();
                *out.edge
                    .entry((f(c), f(r), f(w)))
                    .or_default()
                    .entry((r, c))
                    .or_insert(0) += 1;
            }
        }
    }
    Ok(out)
}

/// The printed peeling loop: recompute every support from scratch, drop
/// edges below `κ − 2`, repeat to a fixpoint, then move to `κ + 1`.
/// Returns trussness keyed by `(u, v)` with `u < v`.
pub fn brute_truss(g: &Graph) -> Result<BTreeMap<(usize, usize), u32>> {
    let d = Dense::new(g, DEFAULT_CAP)?;
    let mut alive: BTreeSet<(usize, usize)> = BTreeSet::new();
    for u in 0..d.n {
        for v in u + 1..d.n {
            if d.linked(u, v) {
                alive.insert((u, v));
            }
        }
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut trussness = BTreeMap::new();
    let mut kappa = 3u32;
    while !alive.is_empty() {
        loop {
            let mut weak = Vec::new();
            for &(u, v) in &alive {
                let support = (0..d.n)
                    .filter(|&w| w != u && w != v && alive.contains(&key(u, w)) && alive.contains(&key(v, w)))
                    .count();
                if support < (kappa - 2) as usize {
                    weak.push((u, v));
                }
            }
            if weak.is_empty() {
                break;
            }
            for e in weak {
                alive.remove(&e);
                trussness.insert(e, kappa - 1);
            }
        }
        kappa += 1;
    }
    Ok(trussness)
}
