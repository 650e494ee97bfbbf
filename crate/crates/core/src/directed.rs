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

//! Reciprocal/directed decomposition and the directed triangle censuses.
//!
//! A stored entry `(u, v)` of a directed adjacency matrix is the arc `u → v`.
//! A vertex type reads `xyz` where `x`, `y` are the center's roles towards
//! the first and second other vertex (`s` source, `t` target, `u`
//! reciprocal) and `z` is the edge between them read from first to second
//! (`+` forward, `-` backward, `o` reciprocal). An edge type at the entry
//! `(u, v)` reads `c y z` where `c` is `+` for an arc and `o` for a
//! reciprocal pair, `y` is the `u`–`w` edge read `u → w` and `z` is the
//! `w`–`v` edge read `w → v`.
//!
//! Of the 27 vertex codes only 15 are distinct, since swapping the two other
//! vertices maps `xyz` to `yx z̄`. Of the 18 edge codes 15 are stored; the
//! reciprocal codes `o--`, `oo+` and `oo-` are the transposes of `o++`,
//! `o-o` and `o+o`, because reading a reciprocal edge from its other end maps
//! `(y, z)` to `(z̄, ȳ)`.

use std::borrow::Cow;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::kron::FactorStats;
use crate::sparse::{IndexMap, SparseMatrix};
use crate::undirected::half;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedParts {
    /// `Aᵀ ∘ A`.
    pub reciprocal: SparseMatrix,
    /// `A − A_r`.
    pub directed: SparseMatrix,
    /// `A + A_dᵀ`.
    pub undirected: SparseMatrix,
}

pub fn split_reciprocal_directed(g: &Graph) -> Result<DirectedParts> {
    g.require_loop_free("the reciprocal/directed split")?;
    let a = g.adj();
    let reciprocal = a.transpose().hadamard(a)?;
    let directed = a.checked_sub(&reciprocal)?;
    let undirected = a.add(&directed.transpose())?;
    Ok(DirectedParts {
        reciprocal,
        directed,
        undirected,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedDegrees {
    pub reciprocal: Vec<u64>,
    pub out: Vec<u64>,
    pub inn: Vec<u64>,
}

pub fn directed_degrees(g: &Graph) -> Result<DirectedDegrees> {
    let parts = split_reciprocal_directed(g)?;
    Ok(DirectedDegrees {
        reciprocal: parts.reciprocal.row_sums()?,
        out: parts.directed.row_sums()?,
        inn: parts.directed.col_sums()?,
    })
}

fn parse_symbol(c: char) -> Option<char> {
    match c {
        '+' => Some('+'),
        '-' | '−' => Some('-'),
        'o' => Some('o'),
        _ => None,
    }
}

fn flip(c: char) -> char {
    match c {
        '+' => '-',
        '-' => '+',
        other => other,
    }
}

macro_rules! code_enum {
    ($name:ident, $count:literal, [$($variant:ident => $code:literal),* $(,)?]) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name {
            $($variant),*
        }

        impl $name {
            pub const ALL: [$name; $count] = [$($name::$variant),*];

            pub fn code(&self) -> &'static str {
                match self {
                    $($name::$variant => $code),*
                }
            }

            pub fn index(&self) -> usize {
                *self as usize
            }

            fn from_canonical(code: &str) -> Option<Self> {
                match code {
                    $($code => Some($name::$variant),)*
                    _ => None,
                }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.code())
            }
        }
    };
}

code_enum!(DirVertexType, 15, [
    SsPlus => "ss+", SsO => "sso",
    SuPlus => "su+", SuO => "suo", SuMinus => "su-",
    StPlus => "st+", StO => "sto", StMinus => "st-",
    UuPlus => "uu+", UuO => "uuo",
    UtPlus => "ut+", UtO => "uto", UtMinus => "ut-",
    TtPlus => "tt+", TtO => "tto",
]);

code_enum!(DirEdgeType, 15, [
    PPP => "+++", PPM => "++-", PPO => "++o",
    PMP => "+-+", PMM => "+--", PMO => "+-o",
    POP => "+o+", POM => "+o-", POO => "+oo",
    OPP => "o++", OPM => "o+-", OPO => "o+o",
    OMP => "o-+", OMO => "o-o", OOO => "ooo",
]);

impl DirVertexType {
    /// Resolves any of the 27 vertex codes to its canonical type.
    pub fn resolve(code: &str) -> Result<Self> {
        let c: Vec<char> = code.chars().collect();
        let bad = || Error::Domain(format!("unknown directed vertex type '{code}'"));
        if c.len() != 3 || !c[..2].iter().all(|r| matches!(r, 's' | 't' | 'u')) {
            return Err(bad());
        }
        let z = parse_symbol(c[2]).ok_or_else(bad)?;
        let direct: String = [c[0], c[1], z].iter().collect();
        let swapped: String = [c[1], c[0], flip(z)].iter().collect();
        Self::from_canonical(&direct)
            .or_else(|| Self::from_canonical(&swapped))
            .ok_or_else(bad)
    }

    /// Enumerates all 27 codes.
    pub fn all_codes() -> Vec<String> {
        let mut out = Vec::with_capacity(27);
        for x in ['s', 'u', 't'] {
            for y in ['s', 'u', 't'] {
                for z in ['+', 'o', '-'] {
                    out.push([x, y, z].iter().collect());
                }
            }
        }
        out
    }
}

impl FromStr for DirVertexType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::resolve(s)
    }
}

impl DirEdgeType {
    /// Resolves any of the 18 edge codes to a stored type and whether the
    /// stored matrix has to be read transposed.
    pub fn resolve(code: &str) -> Result<(Self, bool)> {
        let c: Vec<char> = code.chars().collect();
        let bad = || Error::Domain(format!("unknown directed edge type '{code}'"));
        if c.len() != 3 {
            return Err(bad());
        }
        let central = parse_symbol(c[0]).filter(|&x| x != '-').ok_or_else(bad)?;
        let y = parse_symbol(c[1]).ok_or_else(bad)?;
        let z = parse_symbol(c[2]).ok_or_else(bad)?;
        let direct: String = [central, y, z].iter().collect();
        if let Some(t) = Self::from_canonical(&direct) {
            return Ok((t, false));
        }
        let reversed: String = [central, flip(z), flip(y)].iter().collect();
        Self::from_canonical(&reversed)
            .filter(|_| central == 'o')
            .map(|t| (t, true))
            .ok_or_else(bad)
    }

    pub fn all_codes() -> Vec<String> {
        let mut out = Vec::with_capacity(18);
        for c in ['+', 'o'] {
            for y in ['+', '-', 'o'] {
                for z in ['+', '-', 'o'] {
                    out.push([c, y, z].iter().collect());
                }
            }
        }
        out
    }

    pub fn is_reciprocal(&self) -> bool {
        self.code().starts_with('o')
    }
}

impl FromStr for DirEdgeType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::resolve(s).map(|(t, _)| t)
    }
}

/// The matrices the census formulas are evaluated on. With `M = Aᵀ`, the
/// entry `M_ij` is the arc `j → i`.
struct CensusFactors {
    d: SparseMatrix,
    dt: SparseMatrix,
    r: SparseMatrix,
}

impl CensusFactors {
    fn new(g: &Graph) -> Result<Self> {
        let parts = split_reciprocal_directed(g)?;
        Ok(CensusFactors {
            d: parts.directed.transpose(),
            dt: parts.directed,
            r: parts.reciprocal,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCensus {
    counts: Vec<Vec<u64>>,
}

impl VertexCensus {
    pub fn get(&self, t: DirVertexType) -> &[u64] {
        &self.counts[t.index()]
    }

    pub fn get_code(&self, code: &str) -> Result<&[u64]> {
        Ok(self.get(DirVertexType::resolve(code)?))
    }

    pub fn at(&self, t: DirVertexType, vertex: usize) -> u64 {
        self.counts[t.index()][vertex]
    }

    pub fn iter(&self) -> impl Iterator<Item = (DirVertexType, &[u64])> {
        DirVertexType::ALL.iter().map(move |&t| (t, self.get(t)))
    }

    /// Sum over the 15 types at one vertex.
    pub fn total_at(&self, vertex: usize) -> u64 {
        self.counts.iter().map(|c| c[vertex]).sum()
    }
}

pub fn directed_vertex_census(g: &Graph) -> Result<VertexCensus> {
    use DirVertexType::*;
    let f = CensusFactors::new(g)?;
    let (d, dt, r) = (&f.d, &f.dt, &f.r);
    let mut counts = Vec::with_capacity(15);
    for t in DirVertexType::ALL {
        let (x, y, z, halve) = match t {
            SsPlus => (dt, d, d, false),
            SsO => (dt, r, d, true),
            SuPlus => (r, d, d, false),
            SuO => (r, r, d, false),
            SuMinus => (r, dt, d, false),
            StPlus => (d, d, d, false),
            StO => (d, r, d, false),
            StMinus => (d, dt, d, false),
            UuPlus => (r, d, r, false),
            UuO => (r, r, r, true),
            UtPlus => (d, d, r, false),
            UtO => (d, r, r, false),
            UtMinus => (d, dt, r, false),
            TtPlus => (d, dt, dt, false),
            TtO => (d, r, dt, true),
        };
        let diag = SparseMatrix::diag_of_triple(x, y, z)?;
        let diag = if halve {
            diag.into_iter().map(|v| half(v, t.code())).collect::<Result<_>>()?
        } else {
            diag
        };
        counts.push(diag);
    }
    Ok(VertexCensus { counts })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCensus {
    counts: Vec<SparseMatrix>,
}

impl EdgeCensus {
    pub fn get(&self, t: DirEdgeType) -> &SparseMatrix {
        &self.counts[t.index()]
    }

    /// Any of the 18 codes; non-stored reciprocal codes come back transposed.
    pub fn get_code(&self, code: &str) -> Result<Cow<'_, SparseMatrix>> {
        let (t, transposed) = DirEdgeType::resolve(code)?;
        Ok(if transposed {
            Cow::Owned(self.get(t).transpose())
        } else {
            Cow::Borrowed(self.get(t))
        })
    }

    /// Count of any of the 18 codes at the entry `(u, v)`.
    pub fn at_code(&self, code: &str, u: usize, v: usize) -> Result<u64> {
        let (t, transposed) = DirEdgeType::resolve(code)?;
        Ok(if transposed {
            self.get(t).get(v, u)
        } else {
            self.get(t).get(u, v)
        })
    }

    pub fn at(&self, t: DirEdgeType, u: usize, v: usize) -> u64 {
        self.counts[t.index()].get(u, v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (DirEdgeType, &SparseMatrix)> {
        DirEdgeType::ALL.iter().map(move |&t| (t, self.get(t)))
    }
}

pub fn directed_edge_census(g: &Graph) -> Result<EdgeCensus> {
    use DirEdgeType::*;
    let f = CensusFactors::new(g)?;
    let (d, dt, r) = (&f.d, &f.dt, &f.r);
    let mut counts = Vec::with_capacity(15);
    for t in DirEdgeType::ALL {
        let (mask, x, y) = match t {
            PPP => (d, d, d),
            PPM => (d, dt, d),
            PPO => (d, r, d),
            PMP => (d, d, dt),
            PMM => (d, dt, dt),
            PMO => (d, r, dt),
            POP => (d, d, r),
            POM => (d, dt, r),
            POO => (d, r, r),
            OPP => (r, d, d),
            OPM => (r, dt, d),
            OPO => (r, r, d),
            OMP => (r, d, dt),
            OMO => (r, r, dt),
            OOO => (r, r, r),
        };
        let m = SparseMatrix::masked_product(mask, x, y)?.transpose();
        counts.push(m);
    }
    Ok(EdgeCensus { counts })
}

/// Directed censuses of `C = A ⊗ B` for a loop-free `A` and symmetric `B`.
#[derive(Clone, Debug)]
pub struct DirectedProduct {
    vertex: VertexCensus,
    edge: EdgeCensus,
    b: FactorStats,
    index: IndexMap,
    n: u64,
}

impl DirectedProduct {
    pub fn new(a: &Graph, b: &Graph) -> Result<Self> {
        if !b.adj().is_symmetric() {
            return Err(Error::Precondition(
                "directed product formulas need an undirected (symmetric) right factor".into(),
            ));
        }
        let vertex = directed_vertex_census(a)?;
        let edge = directed_edge_census(a)?;
        let b = FactorStats::new(b)?;
        let n = (a.n() as u64)
            .checked_mul(b.n() as u64)
            .filter(|&n| n < (1u64 << 63))
            .ok_or(Error::Overflow("product vertex count"))?;
        Ok(DirectedProduct {
            vertex,
            edge,
            index: IndexMap::new(b.n().max(1) as u64)?,
            b,
            n,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn left_vertex_census(&self) -> &VertexCensus {
        &self.vertex
    }

    pub fn left_edge_census(&self) -> &EdgeCensus {
        &self.edge
    }

    fn locate(&self, p: u64) -> Result<(usize, usize)> {
        if p < 1 || p > self.n {
            return Err(Error::Domain(format!("product vertex {p} outside 1..={}", self.n)));
        }
        self.index.split0(p)
    }

    /// `(t_A^τ ⊗ diag(B³))_p`.
    pub fn vertex(&self, t: DirVertexType, p: u64) -> Result<u128> {
        let (i, k) = self.locate(p)?;
        Ok(self.vertex.at(t, i) as u128 * self.b.cube_diag(k) as u128)
    }

    pub fn vertex_profile(&self, p: u64) -> Result<Vec<(DirVertexType, u128)>> {
        DirVertexType::ALL
            .iter()
            .map(|&t| Ok((t, self.vertex(t, p)?)))
            .collect()
    }

    /// `(Δ_A^τ ⊗ (B ∘ B²))_pq`.
    pub fn edge(&self, t: DirEdgeType, p: u64, q: u64) -> Result<u128> {
        let (i, k) = self.locate(p)?;
        let (j, l) = self.locate(q)?;
        Ok(self.edge.at(t, i, j) as u128 * self.b.hadamard_square(k, l) as u128)
    }

    pub fn edge_code(&self, code: &str, p: u64, q: u64) -> Result<u128> {
        let (t, transposed) = DirEdgeType::resolve(code)?;
        if transposed {
            self.edge(t, q, p)
        } else {
            self.edge(t, p, q)
        }
    }

    pub fn edge_profile(&self, p: u64, q: u64) -> Result<Vec<(DirEdgeType, u128)>> {
        DirEdgeType::ALL.iter().map(|&t| Ok((t, self.edge(t, p, q)?))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{gen_er, make_clique, make_directed_cycle, RngSeed};
    use crate::undirected::triangle_stats;

    fn nonzero_vertex_types(c: &VertexCensus) -> Vec<&'static str> {
        c.iter()
            .filter(|(_, v)| v.iter().any(|&x| x > 0))
            .map(|(t, _)| t.code())
            .collect()
    }

    #[test]
    fn split_examples() {
        let k3 = make_clique(3, false).unwrap();
        let p = split_reciprocal_directed(&k3).unwrap();
        assert_eq!(p.reciprocal, *k3.adj());
        assert_eq!(p.directed.nnz(), 0);
        let c3 = make_directed_cycle(3).unwrap();
        let p = split_reciprocal_directed(&c3).unwrap();
        assert_eq!(p.reciprocal.nnz(), 0);
        assert_eq!(p.directed, *c3.adj());
        assert_eq!(p.undirected, *k3.adj());
        assert!(split_reciprocal_directed(&make_clique(3, true).unwrap()).is_err());
    }

    #[test]
    fn split_reconstructs_random_digraphs() {
        for seed in 0..10 {
            let g = gen_er(12, 0.4, RngSeed(seed), true, false).unwrap();
            let p = split_reciprocal_directed(&g).unwrap();
            assert_eq!(p.reciprocal.add(&p.directed).unwrap(), *g.adj());
            assert!(p.reciprocal.is_symmetric());
            assert_eq!(p.directed.hadamard(&p.directed.transpose()).unwrap().nnz(), 0);
            assert!(p.undirected.is_symmetric());
            let deg = directed_degrees(&g).unwrap();
            let out = g.adj().row_sums().unwrap();
            for u in 0..12 {
                assert_eq!(out[u], deg.reciprocal[u] + deg.out[u]);
            }
        }
    }

    #[test]
    fn degrees_examples() {
        let d = directed_degrees(&make_directed_cycle(3).unwrap()).unwrap();
        assert_eq!((d.reciprocal, d.out, d.inn), (vec![0; 3], vec![1; 3], vec![1; 3]));
        let d = directed_degrees(&make_clique(3, false).unwrap()).unwrap();
        assert_eq!((d.reciprocal, d.out, d.inn), (vec![2; 3], vec![0; 3], vec![0; 3]));
    }

    #[test]
    fn vertex_census_examples() {
        let c = directed_vertex_census(&make_directed_cycle(3).unwrap()).unwrap();
        assert_eq!(nonzero_vertex_types(&c), vec!["st+"]);
        assert_eq!(c.get(DirVertexType::StPlus), &[1, 1, 1]);
        let c = directed_vertex_census(&make_clique(3, false).unwrap()).unwrap();
        assert_eq!(nonzero_vertex_types(&c), vec!["uuo"]);
        assert_eq!(c.get(DirVertexType::UuO), &[1, 1, 1]);
        let c = directed_vertex_census(&Graph::from_edges(4, &[], true).unwrap()).unwrap();
        assert!(nonzero_vertex_types(&c).is_empty());
    }

    #[test]
    fn transitive_triangle_roles() {
        // 0 → 1, 0 → 2, 1 → 2: vertex 0 is a double source, 2 a double target.
        let g = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)], true).unwrap();
        let c = directed_vertex_census(&g).unwrap();
        assert_eq!(c.get(DirVertexType::SsPlus), &[1, 0, 0]);
        assert_eq!(c.get(DirVertexType::TtPlus), &[0, 0, 1]);
        assert_eq!(c.get(DirVertexType::StMinus), &[0, 1, 0]);
        let e = directed_edge_census(&g).unwrap();
        // Central arc 0 → 2 with the path 0 → 1 → 2.
        assert_eq!(e.at(DirEdgeType::PPP, 0, 2), 1);
        assert_eq!(e.at(DirEdgeType::PPP, 2, 0), 0);
    }

    #[test]
    fn edge_census_examples() {
        let k3 = make_clique(3, false).unwrap();
        let e = directed_edge_census(&k3).unwrap();
        for (t, m) in e.iter() {
            if t == DirEdgeType::OOO {
                assert_eq!(*m, *k3.adj());
            } else {
                assert_eq!(m.nnz(), 0, "{t}");
            }
        }
        let c3 = make_directed_cycle(3).unwrap();
        let e = directed_edge_census(&c3).unwrap();
        // Along the arc 0 → 1 the third vertex closes 0 ← 2 ← 1.
        for (t, m) in e.iter() {
            if t == DirEdgeType::PMM {
                assert_eq!(*m, *c3.adj());
            } else {
                assert_eq!(m.nnz(), 0, "{t}");
            }
        }
    }

    #[test]
    fn aliases_resolve() {
        let mut seen = std::collections::BTreeSet::new();
        for code in DirVertexType::all_codes() {
            seen.insert(DirVertexType::resolve(&code).unwrap());
        }
        assert_eq!(seen.len(), 15);
        assert_eq!(DirVertexType::resolve("us+").unwrap(), DirVertexType::SuMinus);
        assert_eq!(DirVertexType::resolve("ts-").unwrap(), DirVertexType::StPlus);
        assert_eq!(DirVertexType::resolve("tu+").unwrap(), DirVertexType::UtMinus);
        assert_eq!(DirVertexType::resolve("uu−").unwrap(), DirVertexType::UuPlus);
        let mut seen = std::collections::BTreeSet::new();
        let mut transposed = 0;
        for code in DirEdgeType::all_codes() {
            let (t, tr) = DirEdgeType::resolve(&code).unwrap();
            seen.insert(t);
            transposed += usize::from(tr);
        }
        assert_eq!((seen.len(), transposed), (15, 3));
        assert_eq!(DirEdgeType::resolve("o--").unwrap(), (DirEdgeType::OPP, true));
        assert_eq!(DirEdgeType::resolve("oo+").unwrap(), (DirEdgeType::OMO, true));
        assert_eq!(DirEdgeType::resolve("oo-").unwrap(), (DirEdgeType::OPO, true));
        assert!(DirVertexType::resolve("sx+").is_err());
        assert!(DirEdgeType::resolve("-++").is_err());
    }

    #[test]
    fn vertex_alias_identities_are_literal() {
        let g = gen_er(10, 0.5, RngSeed(3), true, false).unwrap();
        let f = CensusFactors::new(&g).unwrap();
        let (d, dt, r) = (&f.d, &f.dt, &f.r);
        let c = directed_vertex_census(&g).unwrap();
        let ss_minus = SparseMatrix::diag_of_triple(dt, dt, d).unwrap();
        assert_eq!(ss_minus, c.get(DirVertexType::SsPlus));
        let tt_minus = SparseMatrix::diag_of_triple(d, d, dt).unwrap();
        assert_eq!(tt_minus, c.get(DirVertexType::TtPlus));
        let uu_minus = SparseMatrix::diag_of_triple(r, dt, r).unwrap();
        assert_eq!(uu_minus, c.get(DirVertexType::UuPlus));
    }

    #[test]
    fn census_completeness() {
        for seed in 0..15 {
            let g = gen_er(11, 0.45, RngSeed(seed), true, false).unwrap();
            let parts = split_reciprocal_directed(&g).unwrap();
            let u = triangle_stats(&Graph::undirected(parts.undirected.clone()).unwrap()).unwrap();
            let c = directed_vertex_census(&g).unwrap();
            for v in 0..g.n() {
                assert_eq!(c.total_at(v), u.per_vertex[v], "seed {seed} vertex {v}");
            }
            let e = directed_edge_census(&g).unwrap();
            for (a, b, _) in g.adj().iter() {
                let readings: u64 = DirEdgeType::all_codes()
                    .iter()
                    .map(|code| e.at_code(code, a, b).unwrap())
                    .sum();
                assert_eq!(readings, u.per_edge.get(a, b), "seed {seed} entry ({a}, {b})");
            }
        }
    }

    #[test]
    fn symmetric_graph_is_all_uuo() {
        let g = gen_er(12, 0.5, RngSeed(9), false, false).unwrap();
        let d = Graph::directed(g.adj().clone()).unwrap();
        let c = directed_vertex_census(&d).unwrap();
        assert_eq!(c.get(DirVertexType::UuO), triangle_stats(&g).unwrap().per_vertex);
        assert_eq!(nonzero_vertex_types(&c).len(), 1);
        let e = directed_edge_census(&d).unwrap();
        assert_eq!(*e.get(DirEdgeType::OOO), triangle_stats(&g).unwrap().per_edge);
    }

    #[test]
    fn product_examples() {
        let c3 = make_directed_cycle(3).unwrap();
        let prod = DirectedProduct::new(&c3, &make_clique(3, false).unwrap()).unwrap();
        for p in 1..=9 {
            for (t, v) in prod.vertex_profile(p).unwrap() {
                assert_eq!(v, if t == DirVertexType::StPlus { 2 } else { 0 });
            }
        }
        let prod = DirectedProduct::new(&c3, &make_clique(2, true).unwrap()).unwrap();
        assert!((1..=6).all(|p| prod.vertex(DirVertexType::StPlus, p).unwrap() == 4));
        assert!(DirectedProduct::new(&c3, &c3).is_err());
    }
}
