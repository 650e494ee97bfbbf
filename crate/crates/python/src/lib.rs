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

//! Python module `pykrontri`. Vertex ids are 1-based throughout.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::OnceLock;

use kron_triangles::directed::{directed_vertex_census, DirEdgeType, DirVertexType};
use kron_triangles::factor::{gen_er, gen_trianglecap_pa, make_clique, make_directed_cycle, make_hub_cycle, RngSeed};
use kron_triangles::io::{read_edge_list_path, write_edge_list_path, ReadOptions};
use kron_triangles::manifest::{FactorSource, Manifest};
use kron_triangles::undirected::triangle_stats;
use kron_triangles::validate::{run_scenario_sized, SCENARIOS};
use kron_triangles::{
    product_truss, truss_decompose, BlockRange, EmitMode, Error, Labels, MaterializeGuard, ProductHandle, ProductTruss,
};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyOSError};
use pyo3::prelude::*;

create_exception!(pykrontri, KronError, PyException);
create_exception!(pykrontri, PreconditionError, KronError);
create_exception!(pykrontri, ManifestError, KronError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        Error::Precondition(_) => PreconditionError::new_err(e.to_string()),
        Error::Manifest(_) => ManifestError::new_err(e.to_string()),
        other => KronError::new_err(other.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for kron_triangles::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn zero_based(v: u64) -> PyResult<usize> {
    v.checked_sub(1)
        .map(|x| x as usize)
        .ok_or_else(|| KronError::new_err("vertex ids are 1-based"))
}

fn json<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(value).map_err(|e| KronError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (s,))
}

/// A factor graph: undirected (symmetric) unless built as directed.
#[pyclass(module = "pykrontri", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: kron_triangles::Graph,
}

#[pymethods]
impl Graph {
    #[new]
    #[pyo3(signature = (n, edges, directed = false))]
    fn new(n: usize, edges: Vec<(u64, u64)>, directed: bool) -> PyResult<Self> {
        let pairs = edges
            .into_iter()
            .map(|(u, v)| Ok((zero_based(u)?, zero_based(v)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Graph {
            inner: kron_triangles::Graph::from_edges(n, &pairs, directed).py()?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (path, directed = false, zero_based = false, strip_loops = false, add_loops = false, n = None))]
    fn read(
        path: PathBuf,
        directed: bool,
        zero_based: bool,
        strip_loops: bool,
        add_loops: bool,
        n: Option<usize>,
    ) -> PyResult<Self> {
        let opts = ReadOptions {
            n,
            directed,
            zero_based,
            strip_loops,
            add_loops,
        };
        Ok(Graph {
            inner: read_edge_list_path(&path, &opts).py()?,
        })
    }

    fn write(&self, path: PathBuf) -> PyResult<()> {
        write_edge_list_path(&self.inner, &path).py()
    }

    #[staticmethod]
    #[pyo3(signature = (n, loops = false))]
    fn clique(n: usize, loops: bool) -> PyResult<Self> {
        Ok(Graph {
            inner: make_clique(n, loops).py()?,
        })
    }

    #[staticmethod]
    fn hub_cycle() -> Self {
        Graph {
            inner: make_hub_cycle(),
        }
    }

    #[staticmethod]
    fn directed_cycle(n: usize) -> PyResult<Self> {
        Ok(Graph {
            inner: make_directed_cycle(n).py()?,
        })
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed, directed = false, loops = false))]
    fn erdos_renyi(n: usize, p: f64, seed: u64, directed: bool, loops: bool) -> PyResult<Self> {
        Ok(Graph {
            inner: gen_er(n, p, RngSeed(seed), directed, loops).py()?,
        })
    }

    /// Preferential attachment keeping every edge in at most one triangle.
    #[staticmethod]
    fn trianglecap_pa(n: usize, seed: u64) -> PyResult<Self> {
        Ok(Graph {
            inner: gen_trianglecap_pa(n, RngSeed(seed)).py()?,
        })
    }

    /// Labels in `1..=count`, one per vertex.
    fn with_labels(&self, labels: Vec<u32>, count: u32) -> PyResult<Self> {
        let labels = Labels::new(labels, count).py()?;
        Ok(Graph {
            inner: self.inner.clone().with_labels(labels).py()?,
        })
    }

    fn with_all_loops(&self) -> Self {
        Graph {
            inner: self.inner.with_all_loops(),
        }
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn is_directed(&self) -> bool {
        self.inner.is_directed()
    }

    #[getter]
    fn loop_count(&self) -> usize {
        self.inner.loop_count()
    }

    /// Undirected: `(u, v)` with `u <= v`. Directed: every arc.
    fn edges(&self) -> Vec<(u64, u64)> {
        let one = |(u, v): (usize, usize)| (u as u64 + 1, v as u64 + 1);
        if self.inner.is_directed() {
            self.inner.adj().iter().map(|(u, v, _)| one((u, v))).collect()
        } else {
            self.inner.undirected_edges().map(one).collect()
        }
    }

    fn degrees(&self) -> Vec<usize> {
        (0..self.inner.n()).map(|v| self.inner.degree(v)).collect()
    }

    fn vertex_triangles(&self) -> PyResult<Vec<u64>> {
        Ok(triangle_stats(&self.inner).py()?.per_vertex)
    }

    /// `{(u, v): triangles}` over edges with `u < v`.
    fn edge_triangles(&self) -> PyResult<BTreeMap<(u64, u64), u64>> {
        let t = triangle_stats(&self.inner).py()?;
        Ok(t.per_edge
            .iter()
            .filter(|&(u, v, _)| u < v)
            .map(|(u, v, c)| ((u as u64 + 1, v as u64 + 1), c))
            .collect())
    }

    fn triangles(&self) -> PyResult<u64> {
        Ok(triangle_stats(&self.inner).py()?.total)
    }

    fn trussness(&self) -> PyResult<BTreeMap<(u64, u64), u32>> {
        let d = truss_decompose(&self.inner).py()?;
        Ok(d.edges()
            .iter()
            .zip(d.values())
            .map(|(&(u, v), &t)| ((u as u64 + 1, v as u64 + 1), t))
            .collect())
    }

    /// `{code: per-vertex counts}` over the 15 directed vertex types.
    fn directed_vertex_census(&self) -> PyResult<BTreeMap<String, Vec<u64>>> {
        let c = directed_vertex_census(&self.inner).py()?;
        Ok(c.iter().map(|(t, v)| (t.code().to_string(), v.to_vec())).collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={}, directed={}, loops={})",
            self.inner.n(),
            self.inner.edge_count(),
            self.inner.is_directed(),
            self.inner.loop_count()
        )
    }
}

/// The product `A ⊗ B`, evaluated through its factors.
#[pyclass(module = "pykrontri", frozen)]
struct Product {
    inner: ProductHandle,
    truss: OnceLock<Result<ProductTruss, String>>,
}

impl Product {
    fn wrap(inner: ProductHandle) -> Self {
        Product {
            inner,
            truss: OnceLock::new(),
        }
    }

    fn product_truss(&self) -> PyResult<&ProductTruss> {
        self.truss
            .get_or_init(|| product_truss(self.inner.left(), self.inner.right()).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|e| PreconditionError::new_err(e.clone()))
    }
}

#[pymethods]
impl Product {
    #[new]
    fn new(a: &Graph, b: &Graph) -> PyResult<Self> {
        Ok(Product::wrap(
            ProductHandle::new(a.inner.clone(), b.inner.clone()).py()?,
        ))
    }

    /// Opens a manifest, verifying factor checksums and totals.
    #[staticmethod]
    fn open(path: PathBuf) -> PyResult<Self> {
        Ok(Product::wrap(Manifest::open(&path).py()?.handle().py()?))
    }

    #[getter]
    fn n(&self) -> u64 {
        self.inner.n()
    }

    #[getter]
    fn regime(&self) -> &'static str {
        self.inner.regime().name()
    }

    #[getter]
    fn left(&self) -> Graph {
        Graph {
            inner: self.inner.left().clone(),
        }
    }

    #[getter]
    fn right(&self) -> Graph {
        Graph {
            inner: self.inner.right().clone(),
        }
    }

    /// Product id of factor vertices `i` (left) and `k` (right).
    fn join(&self, i: u64, k: u64) -> PyResult<u64> {
        kron_triangles::idx_join(i, k, self.inner.right().n() as u64).py()
    }

    fn split(&self, p: u64) -> PyResult<(u64, u64)> {
        kron_triangles::idx_split(p, self.inner.right().n() as u64).py()
    }

    /// Vertices, stored entries, loops, edges and triangles.
    fn summary<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        json(py, &self.inner.summary().py()?)
    }

    fn degree(&self, p: u64) -> PyResult<u64> {
        self.inner.stats().degree(p).py()
    }

    fn vertex_triangles(&self, p: u64) -> PyResult<u128> {
        self.inner.stats().tri_vertex(p).py()
    }

    fn edge_triangles(&self, p: u64, q: u64) -> PyResult<u128> {
        self.inner.stats().tri_edge(p, q).py()
    }

    fn triangles(&self) -> PyResult<u128> {
        self.inner.stats().tri_total().py()
    }

    fn vertex_record<'py>(&self, py: Python<'py>, p: u64) -> PyResult<Bound<'py, PyAny>> {
        json(py, &self.inner.vertex_ground_truth(p).py()?)
    }

    fn edge_record<'py>(&self, py: Python<'py>, p: u64, q: u64) -> PyResult<Bound<'py, PyAny>> {
        json(py, &self.inner.edge_ground_truth(p, q).py()?)
    }

    /// Directed vertex-triangle count of type `code` (left factor directed).
    fn directed_vertex(&self, code: &str, p: u64) -> PyResult<u128> {
        let d = self
            .inner
            .directed()
            .ok_or_else(|| KronError::new_err("left factor is not directed"))?;
        d.vertex(DirVertexType::resolve(code).py()?, p).py()
    }

    fn directed_edge(&self, code: &str, p: u64, q: u64) -> PyResult<u128> {
        let d = self
            .inner
            .directed()
            .ok_or_else(|| KronError::new_err("left factor is not directed"))?;
        let _ = DirEdgeType::resolve(code).py()?;
        d.edge_code(code, p, q).py()
    }

    fn neighbors(&self, p: u64) -> PyResult<Vec<u64>> {
        self.inner.neighbors(p).py()
    }

    /// `(members, edges)` of the induced subgraph on the neighbors of `p`.
    fn egonet(&self, p: u64) -> PyResult<(Vec<u64>, Vec<(u64, u64)>)> {
        let e = self.inner.egonet(p).py()?;
        let edges = e
            .graph
            .undirected_edges()
            .map(|(x, y)| (e.members[x], e.members[y]))
            .collect();
        Ok((e.members, edges))
    }

    /// Stored entries for left blocks `lo..=hi`, in stream order.
    #[pyo3(signature = (lo = None, hi = None, canonical = false))]
    fn edges(&self, lo: Option<u64>, hi: Option<u64>, canonical: bool) -> PyResult<Vec<(u64, u64)>> {
        let n_a = self.inner.left().n() as u64;
        let range = BlockRange::new(lo.unwrap_or(1), hi.unwrap_or(n_a), n_a).py()?;
        let mode = if canonical { EmitMode::Canonical } else { EmitMode::All };
        let count = self.inner.stream_count(range).py()?;
        MaterializeGuard::default().check(self.inner.n() as u128, count).py()?;
        let mut out = Vec::with_capacity(count as usize);
        self.inner
            .stream_edges(range, mode, |p, q| {
                out.push((p, q));
                Ok(())
            })
            .py()?;
        Ok(out)
    }

    /// Product trussness of the edge `(p, q)`, or `None` when absent.
    fn trussness(&self, p: u64, q: u64) -> PyResult<Option<u32>> {
        self.product_truss()?.trussness(p, q).py()
    }

    fn truss_level_size(&self, kappa: u32) -> PyResult<u128> {
        Ok(self.product_truss()?.level_size(kappa))
    }

    fn __repr__(&self) -> String {
        format!("Product(n={}, regime={})", self.inner.n(), self.inner.regime().name())
    }
}

/// Builds a manifest for two edge-list files and writes it to `output`.
#[pyfunction]
#[pyo3(signature = (left, right, output, right_add_loops = false, seeds = vec![]))]
fn write_manifest<'py>(
    py: Python<'py>,
    left: PathBuf,
    right: PathBuf,
    output: PathBuf,
    right_add_loops: bool,
    seeds: Vec<u64>,
) -> PyResult<Bound<'py, PyAny>> {
    let l = FactorSource::new(left, ReadOptions::default());
    let r = FactorSource::new(
        right,
        ReadOptions {
            add_loops: right_add_loops,
            ..Default::default()
        },
    );
    let dir = output.parent().map(PathBuf::from).unwrap_or_default();
    let built = Manifest::build(&l, &r, &dir, seeds).py()?;
    built.manifest.write(&output).py()?;
    json(py, &built.manifest)
}

/// Runs an oracle-equivalence scenario; returns `(passed, report line)`.
#[pyfunction]
#[pyo3(signature = (scenario, seed = 1, instances = 50))]
fn validate(scenario: &str, seed: u64, instances: usize) -> PyResult<(bool, String)> {
    let r = run_scenario_sized(scenario, seed, instances).py()?;
    Ok((r.passed(), r.to_string()))
}

#[pymodule]
fn pykrontri(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Product>()?;
    m.add_function(wrap_pyfunction!(write_manifest, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add("SCENARIOS", SCENARIOS.to_vec())?;
    m.add("KronError", m.py().get_type::<KronError>())?;
    m.add("PreconditionError", m.py().get_type::<PreconditionError>())?;
    m.add("ManifestError", m.py().get_type::<ManifestError>())?;
    Ok(())
}
