//! Python bindings for the `biramsey` crate.

use std::time::Duration;

use biramsey::{
    BicliqueSpec, BipartiteGraph, BrValue, Error, KnownValueRecord, PruneRule, PruneToggles,
    SearchConfig, SearchOutcome, WitnessCertificate,
};
use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;

fn value_error(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An m x n bipartite graph given by the column sets of its rows (0-based).
#[pyclass(name = "Graph", module = "pybiramsey", eq, frozen, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: BipartiteGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, rows: Vec<Vec<usize>>) -> PyResult<Self> {
        Ok(Self {
            inner: BipartiteGraph::from_rows(n, &rows).map_err(value_error)?,
        })
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn rows(&self) -> Vec<Vec<usize>> {
        self.inner.rows().iter().map(|r| r.to_vec()).collect()
    }

    fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.inner.m() && j < self.inner.n() && self.inner.has_edge(i, j)
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_c4_free(&self) -> bool {
        self.inner.is_c4_free()
    }

    fn complement(&self) -> Self {
        Self {
            inner: self.inner.complement(),
        }
    }

    fn transpose(&self) -> Self {
        Self {
            inner: self.inner.transpose(),
        }
    }

    /// Rows and columns of some K_{s,t}, or None.
    fn find_biclique(&self, s: usize, t: usize) -> PyResult<Option<(Vec<usize>, Vec<usize>)>> {
        let spec = BicliqueSpec::new(s, t).map_err(value_error)?;
        Ok(self.inner.find_biclique(spec).map(|b| (b.rows, b.cols)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({}x{}, {} edges)",
            self.inner.m(),
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// A graph checked as a good coloring for (K_{2,2}, K_{t,t}).
#[pyclass(name = "Certificate", module = "pybiramsey", frozen)]
struct PyCertificate {
    inner: WitnessCertificate,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.graph.clone(),
        }
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t
    }

    #[getter]
    fn valid(&self) -> bool {
        self.inner.is_valid()
    }

    #[getter]
    fn max_degree(&self) -> usize {
        self.inner.report.max_degree
    }

    #[getter]
    fn max_pair_intersection(&self) -> usize {
        self.inner.report.max_pair_intersection
    }

    #[getter]
    fn min_t_coverage(&self) -> Option<usize> {
        self.inner.report.min_t_coverage
    }

    /// Number of t-row subsets per union size, when computed.
    fn t_coverage(&self) -> Option<Vec<(usize, usize)>> {
        self.inner
            .report
            .t_coverage
            .as_ref()
            .map(|h| h.iter().map(|(k, v)| (*k, *v)).collect())
    }

    fn report(&self) -> String {
        self.inner.report.to_string()
    }

    /// The witness file text.
    fn serialize(&self) -> String {
        biramsey::serialize_witness(&self.inner)
    }

    fn __repr__(&self) -> String {
        let g = &self.inner.graph;
        format!(
            "Certificate({}x{}, t={}, valid={})",
            g.m(),
            g.n(),
            self.inner.t,
            self.inner.is_valid()
        )
    }
}

/// Result of an arrowing search. `verdict` is ARROWS, NOT_ARROWS or BUDGET_EXHAUSTED.
#[pyclass(name = "Outcome", module = "pybiramsey", frozen)]
struct PyOutcome {
    inner: SearchOutcome,
}

#[pymethods]
impl PyOutcome {
    #[getter]
    fn verdict(&self) -> &'static str {
        self.inner.verdict.label()
    }

    #[getter]
    fn witness(&self) -> Option<PyCertificate> {
        self.inner
            .verdict
            .witness()
            .map(|c| PyCertificate { inner: c.clone() })
    }

    #[getter]
    fn nodes(&self) -> u64 {
        self.inner.stats.nodes
    }

    #[getter]
    fn elapsed(&self) -> f64 {
        self.inner.stats.elapsed.as_secs_f64()
    }

    #[getter]
    fn seeded(&self) -> bool {
        self.inner.stats.seeded
    }

    fn __repr__(&self) -> String {
        format!("Outcome({}, nodes={})", self.verdict(), self.nodes())
    }
}

/// A BR_m(K_{2,2}, K_{t,t}) value with the provenance of its bounds.
#[pyclass(name = "Record", module = "pybiramsey", frozen)]
struct PyRecord {
    inner: KnownValueRecord,
}

#[pymethods]
impl PyRecord {
    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn t(&self) -> usize {
        self.inner.t
    }

    /// The exact value, or None.
    #[getter]
    fn value(&self) -> Option<usize> {
        match self.inner.value {
            BrValue::Exact(v) => Some(v),
            _ => None,
        }
    }

    #[getter]
    fn nonexistent(&self) -> bool {
        self.inner.value == BrValue::Nonexistent
    }

    /// Established lower bound when the value is not exact.
    #[getter]
    fn at_least(&self) -> Option<usize> {
        match self.inner.value {
            BrValue::AtLeast(v) => Some(v),
            _ => None,
        }
    }

    #[getter]
    fn lower(&self) -> String {
        self.inner.lower.to_string()
    }

    #[getter]
    fn upper(&self) -> Option<String> {
        self.inner.upper.map(|p| p.to_string())
    }

    #[getter]
    fn witness(&self) -> Option<PyCertificate> {
        self.inner
            .witness
            .clone()
            .map(|inner| PyCertificate { inner })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Record({})", self.inner)
    }
}

fn certificate(g: BipartiteGraph, t: usize) -> PyResult<PyCertificate> {
    Ok(PyCertificate {
        inner: biramsey::verify_good_coloring(&g, t).map_err(value_error)?,
    })
}

#[pyfunction]
fn witness_6x39() -> PyGraph {
    PyGraph {
        inner: biramsey::witness_6x39(),
    }
}

#[pyfunction]
fn witness_8x29() -> PyGraph {
    PyGraph {
        inner: biramsey::witness_8x29(),
    }
}

/// One full row and m - 1 empty rows.
#[pyfunction]
fn star_witness(m: usize, n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: biramsey::star_witness(m, n).map_err(value_error)?,
    })
}

#[pyfunction]
fn verify(graph: &PyGraph, t: usize) -> PyResult<PyCertificate> {
    certificate(graph.inner.clone(), t)
}

#[pyfunction]
fn parse_witness(text: &str) -> PyResult<PyCertificate> {
    Ok(PyCertificate {
        inner: biramsey::parse_witness(text).map_err(value_error)?,
    })
}

#[pyfunction]
fn degree_cap(m: usize, n: usize, t: usize) -> usize {
    biramsey::degree_cap(m, n, t)
}

#[pyfunction]
fn nonexistence_criterion(m: usize, t: usize) -> bool {
    biramsey::nonexistence_criterion(m, t)
}

fn config(
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    threads: usize,
    disable: Vec<String>,
) -> PyResult<SearchConfig> {
    let mut prune = PruneToggles::default();
    for name in disable {
        prune = prune.without(name.parse::<PruneRule>().map_err(value_error)?);
    }
    let time_budget = time_budget
        .map(|s| Duration::try_from_secs_f64(s).map_err(|e| PyValueError::new_err(e.to_string())))
        .transpose()?;
    Ok(SearchConfig {
        node_budget,
        time_budget,
        threads,
        prune,
        seed: None,
    })
}

/// Decides K_{m,n} -> (K_{2,2}, K_{t,t}) in the standard sense (no good coloring exists).
#[pyfunction]
#[pyo3(signature = (m, n, t, node_budget=None, time_budget=None, threads=1, disable=Vec::new(), seed=None))]
#[allow(clippy::too_many_arguments)]
fn arrows(
    py: Python<'_>,
    m: usize,
    n: usize,
    t: usize,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    threads: usize,
    disable: Vec<String>,
    seed: Option<PyGraph>,
) -> PyResult<PyOutcome> {
    let inst = biramsey::ArrowingInstance::new(m, n, t).map_err(value_error)?;
    let mut cfg = config(node_budget, time_budget, threads, disable)?;
    cfg.seed = seed.map(|g| g.inner);
    let inner = py.detach(|| biramsey::arrows(inst, &cfg));
    Ok(PyOutcome { inner })
}

/// BR_m(K_{2,2}, K_{t,t}) by scanning n up to `limit`.
#[pyfunction]
#[pyo3(signature = (m, t, limit=100, node_budget=None, time_budget=None, threads=1))]
fn find_br_m(
    py: Python<'_>,
    m: usize,
    t: usize,
    limit: usize,
    node_budget: Option<u64>,
    time_budget: Option<f64>,
    threads: usize,
) -> PyResult<PyRecord> {
    let cfg = config(node_budget, time_budget, threads, Vec::new())?;
    let inner = py
        .detach(|| biramsey::find_br_m(m, t, limit, &cfg))
        .map_err(value_error)?;
    Ok(PyRecord { inner })
}

/// `(variables, clauses)` of the CNF encoding.
#[pyfunction]
fn cnf_size(m: usize, n: usize, t: usize) -> PyResult<(usize, u64)> {
    let cnf = biramsey::encode_cnf(biramsey::ArrowingInstance::new(m, n, t).map_err(value_error)?)
        .map_err(value_error)?;
    Ok((cnf.num_vars(), cnf.num_clauses()))
}

/// Writes the DIMACS CNF; it is satisfiable exactly when K_{m,n} does not arrow.
#[pyfunction]
fn export_cnf(m: usize, n: usize, t: usize, path: std::path::PathBuf) -> PyResult<()> {
    let cnf = biramsey::encode_cnf(biramsey::ArrowingInstance::new(m, n, t).map_err(value_error)?)
        .map_err(value_error)?;
    let file = std::fs::File::create(&path).map_err(|e| PyIOError::new_err(e.to_string()))?;
    cnf.write_dimacs(file)
        .map_err(|e| PyIOError::new_err(e.to_string()))
}

/// Decodes a solver model (list of booleans, variable 1 first) to a certificate.
#[pyfunction]
fn decode_model(m: usize, n: usize, t: usize, model: Vec<bool>) -> PyResult<PyCertificate> {
    let cnf = biramsey::encode_cnf(biramsey::ArrowingInstance::new(m, n, t).map_err(value_error)?)
        .map_err(value_error)?;
    Ok(PyCertificate {
        inner: biramsey::decode_model(&cnf, &model).map_err(value_error)?,
    })
}

/// The table of known values, as printed by the command-line tool.
#[pyfunction]
fn theorem_table() -> PyResult<String> {
    Ok(biramsey::TheoremTable::build()
        .map_err(value_error)?
        .to_string())
}

#[pymodule]
fn pybiramsey(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyOutcome>()?;
    m.add_class::<PyRecord>()?;
    m.add_function(wrap_pyfunction!(witness_6x39, m)?)?;
    m.add_function(wrap_pyfunction!(witness_8x29, m)?)?;
    m.add_function(wrap_pyfunction!(star_witness, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(parse_witness, m)?)?;
    m.add_function(wrap_pyfunction!(degree_cap, m)?)?;
    m.add_function(wrap_pyfunction!(nonexistence_criterion, m)?)?;
    m.add_function(wrap_pyfunction!(arrows, m)?)?;
    m.add_function(wrap_pyfunction!(find_br_m, m)?)?;
    m.add_function(wrap_pyfunction!(cnf_size, m)?)?;
    m.add_function(wrap_pyfunction!(export_cnf, m)?)?;
    m.add_function(wrap_pyfunction!(decode_model, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_table, m)?)?;
    Ok(())
}
