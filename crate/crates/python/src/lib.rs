//! Python bindings: the `rcng` extension module.
//!
//! Exposes the graph type, edge colorings, the exact solver, the
//! extremal constructions, and the census/verification entry points.
//! Build `librcng.so` with `cargo build --release -p rcng-python` and
//! import it as `rcng` (see python/smoke_test.py for a loader).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;

use rcng_core::census::CensusOptions;
use rcng_core::constructions::FixtureCache;
use rcng_core::graph::VertexSet;
use rcng_core::solver::SolverOptions;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, value: &serde_json::Value) -> PyResult<Py<PyAny>> {
    use serde_json::Value;
    match value {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_py_any(py)
            } else if let Some(u) = n.as_u64() {
                u.into_py_any(py)
            } else {
                n.as_f64().unwrap_or(f64::NAN).into_py_any(py)
            }
        }
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (k, v) in map {
                dict.set_item(k, json_to_py(py, v)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn to_py_report<T: serde::Serialize>(py: Python<'_>, report: &T) -> PyResult<Py<PyAny>> {
    let value = serde_json::to_value(report)
        .map_err(|e| PyRuntimeError::new_err(format!("report serialization: {e}")))?;
    json_to_py(py, &value)
}

/// A simple undirected graph on at most 62 vertices.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: rcng_core::Graph,
}

#[pymethods]
impl Graph {
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Graph> {
        Ok(Graph { inner: rcng_core::parse_graph6(text).map_err(value_err)? })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Graph> {
        Ok(Graph { inner: rcng_core::Graph::from_edges(n, &edges).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_graph6(&self) -> String {
        rcng_core::to_graph6(&self.inner)
    }

    fn complement(&self) -> Graph {
        Graph { inner: self.inner.complement() }
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Diameter, or None when the graph is disconnected.
    fn diameter(&self) -> Option<u32> {
        self.inner.diameter().finite()
    }

    /// (min degree, max degree, descending degree sequence)
    fn degree_profile(&self) -> (u32, u32, Vec<u32>) {
        let p = self.inner.degree_profile();
        (p.min, p.max, p.sequence)
    }

    /// Vertices at distance exactly 1 and exactly 2 from v.
    fn neighborhoods(&self, v: usize) -> PyResult<(Vec<usize>, Vec<usize>)> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        let (n1, n2) = self.inner.neighborhoods(v);
        Ok((n1.to_vec(), n2.to_vec()))
    }

    fn connected_domination_number(&self) -> PyResult<u32> {
        self.inner.connected_domination_number().map_err(value_err)
    }

    /// graph6 string of the canonical representative: equal iff the
    /// graphs are isomorphic (exact for n <= 11).
    fn canonical_graph6(&self) -> String {
        rcng_core::to_graph6(&rcng_core::canonical_key(&self.inner).to_graph())
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={}, graph6={:?})", self.n(), self.m(), self.to_graph6())
    }
}

/// A total edge coloring with colors 1..=k bound to one graph.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Coloring {
    inner: rcng_core::EdgeColoring,
}

#[pymethods]
impl Coloring {
    #[staticmethod]
    fn from_doc(text: &str) -> PyResult<Coloring> {
        Ok(Coloring { inner: rcng_core::EdgeColoring::parse_doc(text).map_err(value_err)? })
    }

    #[new]
    fn new(graph: &Graph, k: u32, triples: Vec<(usize, usize, u32)>) -> PyResult<Coloring> {
        Ok(Coloring {
            inner: rcng_core::EdgeColoring::new(&graph.inner, k, &triples).map_err(value_err)?,
        })
    }

    #[getter]
    fn k(&self) -> u32 {
        self.inner.k()
    }

    fn triples(&self) -> Vec<(usize, usize, u32)> {
        self.inner.triples().collect()
    }

    fn color_of(&self, u: usize, v: usize) -> Option<u32> {
        self.inner.color_of(u, v)
    }

    fn used_colors(&self) -> u32 {
        self.inner.used_colors()
    }

    fn matches(&self, graph: &Graph) -> bool {
        self.inner.matches(&graph.inner)
    }

    fn to_doc(&self) -> String {
        self.inner.to_doc()
    }

    fn __repr__(&self) -> String {
        format!("Coloring(k={}, edges={})", self.inner.k(), self.inner.edge_count())
    }
}

/// Exact rc value with its witness and lower-bound evidence.
#[pyclass(frozen)]
struct Certificate {
    #[pyo3(get)]
    value: u32,
    #[pyo3(get)]
    evidence: String,
    witness: rcng_core::EdgeColoring,
}

#[pymethods]
impl Certificate {
    #[getter]
    fn witness(&self) -> Coloring {
        Coloring { inner: self.witness.clone() }
    }

    fn __repr__(&self) -> String {
        format!("Certificate(value={}, evidence={:?})", self.value, self.evidence)
    }
}

/// A constructed pair: graph, complement, and validated colorings.
#[pyclass(frozen)]
struct Pair {
    inner: rcng_core::ConstructedPair,
}

#[pymethods]
impl Pair {
    #[getter]
    fn label(&self) -> String {
        self.inner.label.clone()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn g(&self) -> Graph {
        Graph { inner: self.inner.g.clone() }
    }

    #[getter]
    fn g_bar(&self) -> Graph {
        Graph { inner: self.inner.g_bar.clone() }
    }

    #[getter]
    fn coloring_g(&self) -> Coloring {
        Coloring { inner: self.inner.coloring_g.clone() }
    }

    #[getter]
    fn coloring_gbar(&self) -> Coloring {
        Coloring { inner: self.inner.coloring_gbar.clone() }
    }

    #[getter]
    fn claimed_rc_g(&self) -> u32 {
        self.inner.claimed_rc_g
    }

    #[getter]
    fn claimed_rc_gbar(&self) -> u32 {
        self.inner.claimed_rc_gbar
    }

    fn rc_sum(&self) -> u32 {
        self.inner.rc_sum()
    }

    /// The bundle document as a dict.
    fn bundle<'py>(&self, py: Python<'py>) -> PyResult<Py<PyAny>> {
        to_py_report(py, &self.inner.bundle())
    }

    fn __repr__(&self) -> String {
        format!(
            "Pair(label={:?}, n={}, rc_sum={})",
            self.inner.label,
            self.inner.n(),
            self.inner.rc_sum()
        )
    }
}

#[pyfunction]
fn is_rainbow_connected(graph: &Graph, coloring: &Coloring) -> PyResult<bool> {
    rcng_core::is_rainbow_connected(&graph.inner, &coloring.inner).map_err(value_err)
}

#[pyfunction]
fn find_rainbow_path(
    graph: &Graph,
    coloring: &Coloring,
    u: usize,
    v: usize,
) -> PyResult<Option<Vec<(usize, usize)>>> {
    rcng_core::find_rainbow_path(&graph.inner, &coloring.inner, u, v).map_err(value_err)
}

#[pyfunction]
fn rc_upper_tree(graph: &Graph) -> PyResult<Coloring> {
    Ok(Coloring { inner: rcng_core::rc_upper_tree(&graph.inner).map_err(value_err)? })
}

#[pyfunction]
fn has_rainbow_k_coloring(graph: &Graph, k: u32) -> PyResult<Option<Coloring>> {
    Ok(rcng_core::has_rainbow_k_coloring(&graph.inner, k)
        .map_err(value_err)?
        .map(|inner| Coloring { inner }))
}

#[pyfunction]
#[pyo3(signature = (graph, effort=false))]
fn rc_exact(graph: &Graph, effort: bool) -> PyResult<Certificate> {
    let cert = rcng_core::rc_exact_with(&graph.inner, &SolverOptions { effort_override: effort })
        .map_err(value_err)?;
    Ok(Certificate {
        value: cert.value,
        evidence: cert.evidence.to_string(),
        witness: cert.witness,
    })
}

#[pyfunction]
fn extend_rainbow_coloring(
    graph: &Graph,
    coloring: &Coloring,
    attach: Vec<usize>,
) -> PyResult<(Graph, Coloring)> {
    let attach: VertexSet = attach.into_iter().collect();
    let (g, c) = rcng_core::extend_rainbow_coloring(&graph.inner, &coloring.inner, &attach)
        .map_err(value_err)?;
    Ok((Graph { inner: g }, Coloring { inner: c }))
}

#[pyfunction]
fn double_star(p: usize, q: usize) -> PyResult<Pair> {
    Ok(Pair { inner: rcng_core::double_star(p, q).map_err(value_err)? })
}

fn cache_from(fixture_dir: Option<String>) -> Option<FixtureCache> {
    match fixture_dir {
        Some(dir) => Some(FixtureCache::new(dir)),
        None => Some(FixtureCache::from_env()),
    }
}

#[pyfunction]
#[pyo3(signature = (n, fixture_dir=None))]
fn lower_family(n: usize, fixture_dir: Option<String>) -> PyResult<Pair> {
    let cache = cache_from(fixture_dir);
    Ok(Pair {
        inner: rcng_core::constructions::lower_family_with(n, cache.as_ref())
            .map_err(value_err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (fixture_dir=None))]
fn small_case_pairs(fixture_dir: Option<String>) -> PyResult<Vec<Pair>> {
    let cache = cache_from(fixture_dir);
    Ok(rcng_core::constructions::small_case_pairs_with(cache.as_ref())
        .map_err(value_err)?
        .into_iter()
        .map(|inner| Pair { inner })
        .collect())
}

#[pyfunction]
fn two_two_filter<'py>(py: Python<'py>, graph: &Graph) -> PyResult<Py<PyAny>> {
    to_py_report(py, &rcng_core::two_two_filter(&graph.inner))
}

#[pyfunction]
fn enumerate_both_connected(n: usize) -> PyResult<Vec<Graph>> {
    Ok(rcng_core::enumerate_both_connected(n)
        .map_err(value_err)?
        .into_iter()
        .map(|inner| Graph { inner })
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, effort=false, threads=0))]
fn ng_census<'py>(py: Python<'py>, n: usize, effort: bool, threads: usize) -> PyResult<Py<PyAny>> {
    let opts = CensusOptions { effort_override: effort, threads, checkpoint: None };
    let report = rcng_core::ng_census(n, &opts).map_err(value_err)?;
    to_py_report(py, &report)
}

#[pyfunction]
#[pyo3(signature = (n, effort=false, threads=0))]
fn verify_no_2_2<'py>(
    py: Python<'py>,
    n: usize,
    effort: bool,
    threads: usize,
) -> PyResult<Py<PyAny>> {
    let opts = CensusOptions { effort_override: effort, threads, checkpoint: None };
    let report = rcng_core::verify_no_2_2(n, &opts).map_err(value_err)?;
    to_py_report(py, &report)
}

#[pymodule]
fn rcng(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Coloring>()?;
    m.add_class::<Certificate>()?;
    m.add_class::<Pair>()?;
    m.add_function(wrap_pyfunction!(is_rainbow_connected, m)?)?;
    m.add_function(wrap_pyfunction!(find_rainbow_path, m)?)?;
    m.add_function(wrap_pyfunction!(rc_upper_tree, m)?)?;
    m.add_function(wrap_pyfunction!(has_rainbow_k_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(rc_exact, m)?)?;
    m.add_function(wrap_pyfunction!(extend_rainbow_coloring, m)?)?;
    m.add_function(wrap_pyfunction!(double_star, m)?)?;
    m.add_function(wrap_pyfunction!(lower_family, m)?)?;
    m.add_function(wrap_pyfunction!(small_case_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(two_two_filter, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_both_connected, m)?)?;
    m.add_function(wrap_pyfunction!(ng_census, m)?)?;
    m.add_function(wrap_pyfunction!(verify_no_2_2, m)?)?;
    Ok(())
}
