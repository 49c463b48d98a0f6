//! Python bindings. Vertices are 1-based on the Python side, matching the
//! edge-list text format; edge ids are 0-based list positions.

use std::collections::BTreeMap;

use forestry::degseq::{degree_sequence_multiplicities, enumerate_degree_sequences};
use forestry::generators::{self, Family};
use forestry::orientations::{
    count_distinct_indeg, count_distinct_outdeg, count_distinct_score,
    count_subdigraph_score_vectors,
};
use forestry::tutte::{count_forests_brute, tutte_deletion_contraction, tutte_subset_expansion};
use forestry::verify::{self, compare_counts, verify_equivalence_chain};
use forestry::{EdgeSubset, EnumerationCap, Error, Multigraph};
use num_bigint::{BigInt, BigUint};
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

create_exception!(
    forestry,
    CapExceededError,
    PyValueError,
    "Enumeration would exceed the configured cap."
);
create_exception!(
    forestry,
    InvariantError,
    PyRuntimeError,
    "Two computations that must agree did not."
);

const DEFAULT_CAP: u32 = EnumerationCap::DEFAULT.0;

fn py_err(err: Error) -> PyErr {
    match err {
        Error::EnumerationCapExceeded { .. } => CapExceededError::new_err(err.to_string()),
        Error::ChainBroken(_) | Error::ForestRoutesDisagree { .. } => {
            InvariantError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

fn zero_based(v: usize, n: usize) -> PyResult<usize> {
    if v == 0 || v > n {
        return Err(PyValueError::new_err(format!("vertex {v} not in 1..={n}")));
    }
    Ok(v - 1)
}

/// Undirected multigraph; loops and parallel edges allowed.
#[pyclass(name = "Graph", module = "forestry", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: Multigraph,
}

impl PyGraph {
    pub fn inner(&self) -> &Multigraph {
        &self.inner
    }
}

impl From<Multigraph> for PyGraph {
    fn from(inner: Multigraph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let pairs = edges
            .into_iter()
            .map(|(u, v)| Ok((zero_based(u, n)?, zero_based(v, n)?)))
            .collect::<PyResult<Vec<_>>>()?;
        Ok(Multigraph::new(n, pairs).map_err(py_err)?.into())
    }

    /// Parses the `n m` header plus edge-line text format.
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(forestry::parse_edge_list(text).map_err(py_err)?.into())
    }

    /// Builds a graph from a `family:params` string such as `cycle:4`.
    #[staticmethod]
    #[pyo3(signature = (family, seed = 0))]
    fn generate(family: &str, seed: u64) -> PyResult<Self> {
        let family: Family = family.parse().map_err(py_err)?;
        Ok(family.generate(seed).map_err(py_err)?.into())
    }

    fn to_edge_list(&self) -> String {
        forestry::to_edge_list(&self.inner)
    }

    #[getter]
    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner
            .edges()
            .iter()
            .map(|e| (e.u() + 1, e.v() + 1))
            .collect()
    }

    fn degrees(&self) -> Vec<i64> {
        self.inner.degrees().into_inner()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_bipartite(&self) -> bool {
        self.inner.is_bipartite()
    }

    /// Left side of a 2-coloring, or `None` for a non-bipartite graph.
    fn bipartition(&self) -> Option<Vec<usize>> {
        self.inner
            .bipartition()
            .map(|p| p.left().into_iter().map(|v| v + 1).collect())
    }

    fn is_bridge(&self, edge: usize) -> PyResult<bool> {
        self.inner.is_bridge(edge).map_err(py_err)
    }

    fn delete_edge(&self, edge: usize) -> PyResult<Self> {
        Ok(self.inner.delete_edge(edge).map_err(py_err)?.into())
    }

    fn contract_edge(&self, edge: usize) -> PyResult<Self> {
        Ok(self.inner.contract_edge(edge).map_err(py_err)?.into())
    }

    fn __len__(&self) -> usize {
        self.inner.num_edges()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, {:?})", self.inner.num_vertices(), self.edges())
    }
}

/// An orientation of a graph, stored as the set of reversed edges; edge
/// `i` with endpoints `u <= v` runs `u -> v` unless reversed.
#[pyclass(
    name = "Orientation",
    module = "forestry",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyOrientation {
    graph: Multigraph,
    reversed: EdgeSubset,
}

impl PyOrientation {
    fn view(&self) -> forestry::Orientation<'_> {
        forestry::Orientation::from_subset(&self.graph, &self.reversed)
            .expect("validated at construction")
    }

    fn wrap(&self, o: forestry::Orientation<'_>) -> Self {
        PyOrientation {
            graph: self.graph.clone(),
            reversed: o.reversed(),
        }
    }
}

#[pymethods]
impl PyOrientation {
    /// `bits[i] == '1'` reverses edge `i`; loops must stay `'0'`.
    #[new]
    #[pyo3(signature = (graph, bits = None))]
    fn new(graph: &PyGraph, bits: Option<&str>) -> PyResult<Self> {
        let g = graph.inner.clone();
        let reversed = match bits {
            Some(s) => forestry::Orientation::from_bit_string(&g, s)
                .map_err(py_err)?
                .reversed(),
            None => g.empty_subset().map_err(py_err)?,
        };
        Ok(PyOrientation { graph: g, reversed })
    }

    /// Every edge directed from the left side to the right side.
    #[staticmethod]
    fn left_to_right(graph: &PyGraph) -> PyResult<Self> {
        let parts = graph
            .inner
            .bipartition()
            .ok_or_else(|| py_err(Error::NotBipartite))?;
        let o = forestry::Orientation::left_to_right(&graph.inner, &parts).map_err(py_err)?;
        Ok(PyOrientation {
            reversed: o.reversed(),
            graph: graph.inner.clone(),
        })
    }

    /// All orientations in ascending bit-string order.
    #[staticmethod]
    #[pyo3(signature = (graph, cap = DEFAULT_CAP))]
    fn enumerate(graph: &PyGraph, cap: u32) -> PyResult<Vec<Self>> {
        let all = forestry::orientations::enumerate_orientations(&graph.inner, EnumerationCap(cap))
            .map_err(py_err)?;
        Ok(all
            .map(|o| PyOrientation {
                graph: graph.inner.clone(),
                reversed: o.reversed(),
            })
            .collect())
    }

    #[getter]
    fn bits(&self) -> String {
        self.view().to_bit_string()
    }

    /// `(tail, head)` of every edge.
    fn arcs(&self) -> Vec<(usize, usize)> {
        self.view().arcs().map(|(t, h)| (t + 1, h + 1)).collect()
    }

    fn outdegrees(&self) -> Vec<i64> {
        self.view().outdegree_vector().into_inner()
    }

    fn indegrees(&self) -> Vec<i64> {
        self.view().indegree_vector().into_inner()
    }

    fn scores(&self) -> Vec<i64> {
        self.view().score_vector().into_inner()
    }

    /// Score vector of the subdigraph keeping only the given edge ids.
    fn subdigraph_score(&self, edges: Vec<usize>) -> PyResult<Vec<i64>> {
        let f = EdgeSubset::from_edges(edges, self.graph.num_edges()).map_err(py_err)?;
        Ok(self
            .view()
            .subdigraph_score(&f)
            .map_err(py_err)?
            .into_inner())
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn count_subdigraph_scores(&self, cap: u32) -> PyResult<usize> {
        count_subdigraph_score_vectors(&self.view(), EnumerationCap(cap)).map_err(py_err)
    }

    fn reachable(&self, source: usize) -> PyResult<Vec<usize>> {
        let s = zero_based(source, self.graph.num_vertices())?;
        let set = self.view().reachable_set(s).map_err(py_err)?;
        Ok(set.into_iter().map(|v| v + 1).collect())
    }

    /// Reverses a shortest directed path `source -> target`.
    fn reverse_path(&self, source: usize, target: usize) -> PyResult<Self> {
        let n = self.graph.num_vertices();
        let (a, b) = (zero_based(source, n)?, zero_based(target, n)?);
        let o = self.view().reverse_directed_path(a, b).map_err(py_err)?;
        Ok(self.wrap(o))
    }

    /// Reverses the given edge ids; loops are left as they are.
    fn flip(&self, edges: Vec<usize>) -> PyResult<Self> {
        let f = EdgeSubset::from_edges(edges, self.graph.num_edges()).map_err(py_err)?;
        let o = self.view().flip_set(&f).map_err(py_err)?;
        Ok(self.wrap(o))
    }

    fn __repr__(&self) -> String {
        format!("Orientation({:?})", self.bits())
    }
}

#[pyclass(
    name = "VerifyReport",
    module = "forestry",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyVerifyReport {
    n: usize,
    m: usize,
    family: Option<String>,
    seed: Option<u64>,
    forest_count: BigUint,
    degseq_count: BigUint,
    t21_value: BigUint,
    bipartite: bool,
    verdict: String,
    json: String,
}

impl From<verify::VerifyReport> for PyVerifyReport {
    fn from(r: verify::VerifyReport) -> Self {
        PyVerifyReport {
            json: serde_json::to_string(&r).expect("plain data serializes"),
            n: r.graph.n,
            m: r.graph.m,
            family: r.graph.family,
            seed: r.graph.seed,
            verdict: r.verdict.as_str().to_string(),
            forest_count: r.forest_count,
            degseq_count: r.degseq_count,
            t21_value: r.t21_value,
            bipartite: r.bipartite,
        }
    }
}

#[pymethods]
impl PyVerifyReport {
    fn __repr__(&self) -> String {
        format!(
            "VerifyReport(forests={}, degseqs={}, verdict={:?})",
            self.forest_count, self.degseq_count, self.verdict
        )
    }
}

#[pyclass(
    name = "ChainReport",
    module = "forestry",
    frozen,
    get_all,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyChainReport {
    common_value: BigUint,
    t21_value: BigUint,
    indegree_vectors: BigUint,
    outdegree_vectors: BigUint,
    score_vectors: BigUint,
    orientations_checked: u64,
    exhaustive: bool,
    json: String,
}

#[pymethods]
impl PyChainReport {
    fn __repr__(&self) -> String {
        format!(
            "ChainReport(common_value={}, orientations_checked={})",
            self.common_value, self.orientations_checked
        )
    }
}

/// Tutte polynomial as `{(i, j): coefficient}` of `x^i y^j`.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn tutte(graph: &PyGraph, cap: u32) -> PyResult<BTreeMap<(u32, u32), BigUint>> {
    let poly = tutte_subset_expansion(&graph.inner, EnumerationCap(cap)).map_err(py_err)?;
    Ok(poly.terms().map(|(i, j, c)| ((i, j), c.clone())).collect())
}

/// `T(x, y)` by deletion-contraction (no enumeration cap).
#[pyfunction]
fn tutte_eval(graph: &PyGraph, x: i64, y: i64) -> BigInt {
    forestry::tutte::evaluate(&tutte_deletion_contraction(&graph.inner), x, y)
}

/// Number of spanning forests, by memoized recursion.
#[pyfunction]
fn t21(graph: &PyGraph) -> BigUint {
    forestry::tutte::t21(&graph.inner)
}

/// Number of spanning forests, by enumerating edge subsets.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn forests(graph: &PyGraph, cap: u32) -> PyResult<BigUint> {
    count_forests_brute(&graph.inner, EnumerationCap(cap)).map_err(py_err)
}

/// Sorted distinct degree sequences of spanning subgraphs.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn degree_sequences(graph: &PyGraph, cap: u32) -> PyResult<Vec<Vec<i64>>> {
    let set = enumerate_degree_sequences(&graph.inner, EnumerationCap(cap)).map_err(py_err)?;
    Ok(set.iter().map(|d| d.to_vec()).collect())
}

/// How many edge subsets realize each degree sequence, keyed by tuple.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn degree_sequence_counts<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    cap: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let mult = degree_sequence_multiplicities(&graph.inner, EnumerationCap(cap)).map_err(py_err)?;
    let out = PyDict::new(py);
    for (d, k) in mult {
        out.set_item(PyTuple::new(py, d.iter())?, k)?;
    }
    Ok(out)
}

/// Distinct indegree, outdegree and score vector counts.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn orientation_counts(graph: &PyGraph, cap: u32) -> PyResult<BTreeMap<&'static str, BigUint>> {
    let cap = EnumerationCap(cap);
    let g = &graph.inner;
    Ok(BTreeMap::from([
        ("indegree", count_distinct_indeg(g, cap).map_err(py_err)?),
        ("outdegree", count_distinct_outdeg(g, cap).map_err(py_err)?),
        ("score", count_distinct_score(g, cap).map_err(py_err)?),
    ]))
}

/// Forest count against degree-sequence count.
#[pyfunction(name = "verify")]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn verify_graph(py: Python<'_>, graph: &PyGraph, cap: u32) -> PyResult<PyVerifyReport> {
    let g = &graph.inner;
    let report = py.detach(|| compare_counts(g, EnumerationCap(cap)));
    Ok(report.map_err(py_err)?.into())
}

/// Orientation counting chain; raises `InvariantError` if it breaks.
#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn chain(py: Python<'_>, graph: &PyGraph, cap: u32) -> PyResult<PyChainReport> {
    let g = &graph.inner;
    let r = py
        .detach(|| verify_equivalence_chain(g, EnumerationCap(cap)))
        .map_err(py_err)?;
    Ok(PyChainReport {
        json: serde_json::to_string(&r).expect("plain data serializes"),
        common_value: r.common_value,
        t21_value: r.t21_value,
        indegree_vectors: r.indegree_vectors,
        outdegree_vectors: r.outdegree_vectors,
        score_vectors: r.score_vectors,
        orientations_checked: r.orientations_checked,
        exhaustive: r.exhaustive,
    })
}

/// `verify` on `count` instances of a generator family.
#[pyfunction]
#[pyo3(signature = (family, count, seed = 0, cap = DEFAULT_CAP))]
fn sweep(
    py: Python<'_>,
    family: &str,
    count: usize,
    seed: u64,
    cap: u32,
) -> PyResult<Vec<PyVerifyReport>> {
    let family: Family = family.parse().map_err(py_err)?;
    let reports = py
        .detach(|| verify::sweep(&family, count, seed, EnumerationCap(cap)))
        .map_err(py_err)?;
    Ok(reports.into_iter().map(PyVerifyReport::from).collect())
}

#[pyfunction]
fn is_cactus(graph: &PyGraph) -> bool {
    generators::is_cactus(&graph.inner)
}

#[pymodule]
#[pyo3(name = "forestry")]
pub fn forestry_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add_class::<PyVerifyReport>()?;
    m.add_class::<PyChainReport>()?;
    m.add_function(wrap_pyfunction!(tutte, m)?)?;
    m.add_function(wrap_pyfunction!(tutte_eval, m)?)?;
    m.add_function(wrap_pyfunction!(t21, m)?)?;
    m.add_function(wrap_pyfunction!(forests, m)?)?;
    m.add_function(wrap_pyfunction!(degree_sequences, m)?)?;
    m.add_function(wrap_pyfunction!(degree_sequence_counts, m)?)?;
    m.add_function(wrap_pyfunction!(orientation_counts, m)?)?;
    m.add_function(wrap_pyfunction!(verify_graph, m)?)?;
    m.add_function(wrap_pyfunction!(chain, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(is_cactus, m)?)?;
    m.add("CapExceededError", m.py().get_type::<CapExceededError>())?;
    m.add("InvariantError", m.py().get_type::<InvariantError>())?;
    m.add("DEFAULT_CAP", DEFAULT_CAP)?;
    Ok(())
}
