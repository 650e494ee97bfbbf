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

//! Named oracle-equivalence suites: formula paths against brute force on
//! materialized products.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;

use crate::directed::{directed_edge_census, directed_vertex_census, DirEdgeType, DirVertexType, DirectedProduct};
use crate::error::Result;
use crate::factor::{gen_er, gen_trianglecap_pa, make_clique, random_labels, RngSeed};
use crate::graph::Graph;
use crate::kron::ProductStats;
use crate::labeled::{edge_types, labeled_vertex_counts, vertex_types, LabeledProduct};
use crate::oracle::{brute_directed_census, brute_labeled_census, brute_triangles, brute_truss};
use crate::sparse::{MaterializeGuard, SparseMatrix};
use crate::stream::{BlockRange, EmitMode, ProductHandle};
use crate::truss::{product_truss, truss_decompose, verify_counterexample};
use crate::undirected::triangle_stats;

pub const SCENARIOS: [&str; 9] = [
    "undirected-all-regimes",
    "directed",
    "labeled",
    "truss-product",
    "truss-peeling",
    "clique-identities",
    "truss-example",
    "stream-partition",
    "egonet",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub scenario: String,
    pub seed: u64,
    pub instances: usize,
    pub checks: u64,
    pub first_divergence: Option<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.first_divergence.is_none()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_divergence {
            None => write!(
                f,
                "PASS {} seed={} instances={} checks={}",
                self.scenario, self.seed, self.instances, self.checks
            ),
            Some(d) => write!(f, "FAIL {} seed={}: {d}", self.scenario, self.seed),
        }
    }
}

struct Checker {
    instances: usize,
    checks: u64,
    failure: Option<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            instances: 0,
            checks: 0,
            failure: None,
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if got != want {
            if self.failure.is_none() {
                self.failure = Some(format!("{}: formula {got:?}, oracle {want:?}", what()));
            }
            return false;
        }
        true
    }

    fn failed(&self) -> bool {
        self.failure.is_some()
    }

    fn report(self, scenario: &str, seed: u64) -> ValidationReport {
        ValidationReport {
            scenario: scenario.to_string(),
            seed,
            instances: self.instances,
            checks: self.checks,
            first_divergence: self.failure,
        }
    }
}

/// Runs a scenario with its default instance count.
pub fn run_scenario(name: &str, seed: u64) -> Result<ValidationReport> {
    run_scenario_sized(name, seed, 50)
}

/// `instances` is the number of random instances per regime where the
/// scenario draws random inputs.
pub fn run_scenario_sized(name: &str, seed: u64, instances: usize) -> Result<ValidationReport> {
    let mut c = Checker::new();
    match name {
        "undirected-all-regimes" => undirected_all_regimes(&mut c, seed, instances)?,
        "directed" => directed(&mut c, seed, instances)?,
        "labeled" => labeled(&mut c, seed, instances)?,
        "truss-product" => truss_product(&mut c, seed, instances)?,
        "truss-peeling" => truss_peeling(&mut c, seed, instances)?,
        "clique-identities" => clique_identities(&mut c, 3..=8)?,
        "truss-example" => truss_example(&mut c)?,
        "stream-partition" => stream_partition(&mut c, seed, instances)?,
        "egonet" => egonet(&mut c, seed, instances)?,
        other => {
            return Err(crate::Error::Domain(format!(
                "unknown scenario '{other}'; expected one of {}",
                SCENARIOS.join(", ")
            )))
        }
    }
    Ok(c.report(name, seed))
}

fn materialize(a: &Graph, b: &Graph) -> Result<SparseMatrix> {
    a.adj().kron(b.adj(), &MaterializeGuard::default())
}

fn sub_seed(seed: u64, stream: u64, index: usize) -> RngSeed {
    RngSeed(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (stream << 32) ^ index as u64)
}

/// Undirected factor in the given loop setting; `Some(p)` draws loops with
/// probability `p`, forcing at least one.
fn undirected_factor(n: usize, p: f64, loops: bool, seed: RngSeed) -> Result<Graph> {
    let g = gen_er(n, p, seed, false, loops)?;
    if loops && !g.has_loops() {
        let mut rows: Vec<(usize, usize)> = g.adj().iter().map(|(u, v, _)| (u, v)).collect();
        rows.push((0, 0));
        return Graph::undirected(SparseMatrix::from_pattern(n, rows)?);
    }
    Ok(g)
}

fn check_undirected_product(c: &mut Checker, a: &Graph, b: &Graph, tag: &str) -> Result<()> {
    let stats = ProductStats::new(a, b)?;
    let prod = Graph::undirected(materialize(a, b)?)?;
    let brute = brute_triangles(&prod)?;
    for p in 1..=stats.n() {
        let v = (p - 1) as usize;
        if !c.eq(stats.degree(p)?, prod.degree(v) as u64, || {
            format!("{tag} degree at {p}")
        }) || !c.eq(stats.tri_vertex(p)?, brute.per_vertex[v] as u128, || {
            format!("{tag} t at {p}")
        }) {
            return Ok(());
        }
    }
    for (u, v, _) in prod.adj().iter() {
        if u == v {
            continue;
        }
        let want = brute.per_edge.get(&(u, v)).copied().unwrap_or(0) as u128;
        if !c.eq(stats.tri_edge(u as u64 + 1, v as u64 + 1)?, want, || {
            format!("{tag} Δ at ({}, {})", u + 1, v + 1)
        }) {
            return Ok(());
        }
    }
    c.eq(stats.tri_total()?, brute.total as u128, || format!("{tag} τ"));
    Ok(())
}

fn undirected_all_regimes(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for (r, (a_loops, b_loops)) in [(false, false), (false, true), (true, true)].into_iter().enumerate() {
        for k in 0..instances {
            let s = sub_seed(seed, r as u64, k);
            let mut rng_sizes = s.rng();
            let (na, nb) = sizes(&mut rng_sizes, 12);
            let a = undirected_factor(na, 0.45, a_loops, sub_seed(seed, 10 + r as u64, k))?;
            let b = undirected_factor(nb, 0.45, b_loops, sub_seed(seed, 20 + r as u64, k))?;
            c.instances += 1;
            check_undirected_product(c, &a, &b, &format!("regime {r} instance {k}"))?;
            if c.failed() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn sizes(rng: &mut impl Rng, max: usize) -> (usize, usize) {
    (rng.random_range(3..=max), rng.random_range(3..=max))
}

fn check_directed_factor(c: &mut Checker, a: &Graph, tag: &str) -> Result<bool> {
    let brute = brute_directed_census(a)?;
    let vc = directed_vertex_census(a)?;
    let ec = directed_edge_census(a)?;
    for t in DirVertexType::ALL {
        if !c.eq(vc.get(t).to_vec(), brute.vertex[t.code()].clone(), || {
            format!("{tag} vertex type {t}")
        }) {
            return Ok(false);
        }
    }
    for t in DirEdgeType::ALL {
        let got: BTreeMap<(usize, usize), u64> = ec.get(t).iter().map(|(u, v, x)| ((u, v), x)).collect();
        if !c.eq(got, brute.edge[t.code()].clone(), || format!("{tag} edge type {t}")) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn directed(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for (r, b_loops) in [false, true].into_iter().enumerate() {
        for k in 0..instances {
            let mut rng = sub_seed(seed, 30 + r as u64, k).rng();
            let (na, nb) = (rng.random_range(3..=8), rng.random_range(2..=6));
            let a = gen_er(na, 0.5, sub_seed(seed, 40 + r as u64, k), true, false)?;
            let b = undirected_factor(nb, 0.6, b_loops, sub_seed(seed, 50 + r as u64, k))?;
            c.instances += 1;
            let tag = format!("loops={b_loops} instance {k}");
            if !check_directed_factor(c, &a, &format!("{tag} factor"))? {
                return Ok(());
            }
            let prod = DirectedProduct::new(&a, &b)?;
            let cg = Graph::directed(materialize(&a, &b)?)?;
            let brute = brute_directed_census(&cg)?;
            for p in 1..=prod.n() {
                for t in DirVertexType::ALL {
                    let want = brute.vertex_count(t.code(), (p - 1) as usize) as u128;
                    if !c.eq(prod.vertex(t, p)?, want, || format!("{tag} product {t} at {p}")) {
                        return Ok(());
                    }
                }
            }
            for (u, v, _) in cg.adj().iter() {
                let (p, q) = (u as u64 + 1, v as u64 + 1);
                for t in DirEdgeType::ALL {
                    let want = brute.edge_count(t.code(), u, v) as u128;
                    if !c.eq(prod.edge(t, p, q)?, want, || format!("{tag} product {t} at ({p}, {q})")) {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn labeled(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for (r, b_loops) in [false, true].into_iter().enumerate() {
        for k in 0..instances {
            let mut rng = sub_seed(seed, 60 + r as u64, k).rng();
            let (na, nb) = (rng.random_range(3..=8), rng.random_range(2..=6));
            let a = gen_er(na, 0.5, sub_seed(seed, 70 + r as u64, k), false, false)?.with_labels(random_labels(
                na,
                3,
                sub_seed(seed, 80 + r as u64, k),
            )?)?;
            let b = undirected_factor(nb, 0.6, b_loops, sub_seed(seed, 90 + r as u64, k))?;
            c.instances += 1;
            let tag = format!("loops={b_loops} instance {k}");
            let prod = LabeledProduct::new(&a, &b)?;
            let labels: Vec<u32> = (1..=prod.n()).map(|p| prod.label_of(p)).collect::<Result<_>>()?;
            let cg = Graph::undirected(materialize(&a, &b)?)?.with_labels(crate::graph::Labels::new(labels, 3)?)?;
            let brute = brute_labeled_census(&cg)?;
            let brute_a = brute_labeled_census(&a)?;
            for t in vertex_types(3) {
                let key = (t.q1, t.q2, t.q3);
                let want_a = brute_a.vertex.get(&key).cloned().unwrap_or_else(|| vec![0; na]);
                if !c.eq(labeled_vertex_counts(&a, t)?, want_a, || {
                    format!("{tag} factor vertex {t}")
                }) {
                    return Ok(());
                }
                for p in 1..=prod.n() {
                    let want = brute.vertex.get(&key).map_or(0, |v| v[(p - 1) as usize]) as u128;
                    if !c.eq(prod.vertex(t, p)?, want, || format!("{tag} product vertex {t} at {p}")) {
                        return Ok(());
                    }
                }
            }
            for t in edge_types(3) {
                let key = (t.q1, t.q2, t.q3);
                for (u, v, _) in cg.adj().iter() {
                    let want = brute.edge.get(&key).and_then(|m| m.get(&(u, v))).copied().unwrap_or(0) as u128;
                    let got = prod.edge(t, u as u64 + 1, v as u64 + 1)?;
                    if !c.eq(got, want, || {
                        format!("{tag} product edge {t} at ({}, {})", u + 1, v + 1)
                    }) {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn truss_product(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for k in 0..instances {
        let mut rng = sub_seed(seed, 100, k).rng();
        let (na, nb) = (rng.random_range(3..=10), rng.random_range(3..=30));
        let a = gen_er(na, 0.55, sub_seed(seed, 101, k), false, false)?;
        let b = gen_trianglecap_pa(nb, sub_seed(seed, 102, k))?;
        c.instances += 1;
        let pt = product_truss(&a, &b)?;
        let cg = Graph::undirected(materialize(&a, &b)?)?;
        let brute = brute_truss(&cg)?;
        let got: BTreeMap<(usize, usize), u32> = pt
            .materialize(&MaterializeGuard::default())?
            .into_iter()
            .map(|(p, q, t)| (((p - 1) as usize, (q - 1) as usize), t))
            .collect();
        if !c.eq(got, brute, || format!("instance {k} (n_A={na}, n_B={nb}) trussness")) {
            return Ok(());
        }
    }
    let hub = crate::factor::make_hub_cycle();
    let rejected = product_truss(&make_clique(3, false)?, &hub).is_err();
    c.eq(rejected, true, || "hub-cycle right factor accepted".to_string());
    Ok(())
}

fn truss_peeling(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for k in 0..instances {
        let mut rng = sub_seed(seed, 110, k).rng();
        let n = rng.random_range(3..=15);
        let p = rng.random_range(0.2..0.8);
        let g = gen_er(n, p, sub_seed(seed, 111, k), false, false)?;
        c.instances += 1;
        let d = truss_decompose(&g)?;
        let got: BTreeMap<(usize, usize), u32> = d.edges().iter().copied().zip(d.values().iter().copied()).collect();
        if !c.eq(got, brute_truss(&g)?, || format!("instance {k} (n={n}) trussness")) {
            return Ok(());
        }
    }
    Ok(())
}

/// `K⊗K`, `K⊗J` and `(J⊗J) − I` for every size pair in `range`.
fn clique_identities(c: &mut Checker, range: std::ops::RangeInclusive<usize>) -> Result<()> {
    for na in range.clone() {
        for nb in range.clone() {
            c.instances += 3;
            let (ka, kb) = (make_clique(na, false)?, make_clique(nb, false)?);
            let (ja, jb) = (make_clique(na, true)?, make_clique(nb, true)?);
            let (na64, nb64) = (na as u64, nb as u64);
            for (a, b, degree, tri, edge, tag) in [
                (
                    &ka,
                    &kb,
                    (na64 - 1) * (nb64 - 1),
                    (na64 - 1) * (na64 - 2) * (nb64 - 1) * (nb64 - 2) / 2,
                    (na64 - 2) * (nb64 - 2),
                    "K⊗K",
                ),
                (
                    &ka,
                    &jb,
                    (na64 - 1) * nb64,
                    (na64 - 1) * (na64 - 2) * nb64 * nb64 / 2,
                    (na64 - 2) * nb64,
                    "K⊗J",
                ),
                (
                    &ja,
                    &jb,
                    na64 * nb64 - 1,
                    (na64 * nb64 - 1) * (na64 * nb64 - 2) / 2,
                    na64 * nb64 - 2,
                    "J⊗J−I",
                ),
            ] {
                let tag = format!("{tag} n_A={na} n_B={nb}");
                let stats = ProductStats::new(a, b)?;
                for p in 1..=stats.n() {
                    c.eq(stats.degree(p)?, degree, || format!("{tag} closed-form degree at {p}"));
                    c.eq(stats.tri_vertex(p)?, tri as u128, || {
                        format!("{tag} closed-form t at {p}")
                    });
                }
                let m = stats.tri_edge_matrix(&MaterializeGuard::default())?;
                c.eq(m.values().iter().all(|&x| x == edge), true, || {
                    format!("{tag} closed-form Δ")
                });
                check_undirected_product(c, a, b, &tag)?;
                if c.failed() {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn truss_example(c: &mut Checker) -> Result<()> {
    c.instances += 1;
    let r = verify_counterexample()?;
    c.eq(
        r.edge_triangle_histogram,
        BTreeMap::from([(1, 32), (2, 64), (4, 32)]),
        || "edge Δ histogram".into(),
    );
    c.eq(r.truss_sizes, BTreeMap::from([(3, 128), (4, 80), (5, 0)]), || {
        "truss sizes".into()
    });
    c.eq(r.triangles, 96, || "τ".into());
    Ok(())
}

fn stream_partition(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for k in 0..instances {
        let mut rng = sub_seed(seed, 120, k).rng();
        let (na, nb) = sizes(&mut rng, 10);
        let parts = rng.random_range(1..=na as u64);
        let a = gen_er(na, 0.4, sub_seed(seed, 121, k), false, true)?;
        let b = gen_er(nb, 0.4, sub_seed(seed, 122, k), false, true)?;
        c.instances += 1;
        let h = ProductHandle::new(a.clone(), b.clone())?;
        let mut got = Vec::new();
        for r in BlockRange::partition(na as u64, parts)? {
            h.stream_edges(r, EmitMode::All, |p, q| {
                got.push((p, q));
                Ok(())
            })?;
        }
        let mut again = Vec::new();
        h.stream_edges(BlockRange::full(na as u64)?, EmitMode::All, |p, q| {
            again.push((p, q));
            Ok(())
        })?;
        if !c.eq(&got, &again, || {
            format!("instance {k} partition into {parts} differs from the full stream")
        }) {
            return Ok(());
        }
        got.sort_unstable();
        let want: Vec<(u64, u64)> = materialize(&a, &b)?
            .iter()
            .map(|(u, v, _)| (u as u64 + 1, v as u64 + 1))
            .collect();
        if !c.eq(got, want, || format!("instance {k} stream vs materialized entries")) {
            return Ok(());
        }
    }
    Ok(())
}

fn egonet(c: &mut Checker, seed: u64, instances: usize) -> Result<()> {
    for k in 0..instances {
        let mut rng = sub_seed(seed, 130, k).rng();
        let (na, nb) = sizes(&mut rng, 9);
        let a = gen_er(na, 0.5, sub_seed(seed, 131, k), false, false)?;
        let b = undirected_factor(nb, 0.5, k % 2 == 1, sub_seed(seed, 132, k))?;
        c.instances += 1;
        let h = ProductHandle::new(a.clone(), b.clone())?;
        let prod = Graph::undirected(materialize(&a, &b)?)?.hollow();
        let t = triangle_stats(&prod)?;
        for p in 1..=h.n() {
            let v = (p - 1) as usize;
            let nbrs: Vec<u64> = prod.neighbors(v).iter().map(|&u| u as u64 + 1).collect();
            if !c.eq(h.neighbors(p)?, nbrs, || format!("instance {k} neighbors of {p}"))
                || !c.eq(h.egonet(p)?.edge_count() as u64, t.per_vertex[v], || {
                    format!("instance {k} egonet at {p}")
                })
            {
                return Ok(());
            }
        }
    }
    Ok(())
}
