//! Python bindings: graphs, orientations, the bounded-diameter orienter and
//! the exhaustive oracles.

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::{PyBytes, PyDict};

use odiam::constructions;
use odiam::format;
use odiam::graph::{self, Distance};
use odiam::oracle::{self, SweepOptions, Threshold};
use odiam::orient;

create_exception!(pyodiam, OdiamError, PyException);
create_exception!(pyodiam, BridgeError, OdiamError);
create_exception!(pyodiam, CapError, OdiamError);
create_exception!(pyodiam, PreconditionError, OdiamError);

fn to_py(e: odiam::Error) -> PyErr {
    let msg = e.to_string();
    match e {
        odiam::Error::Bridge(_) => BridgeError::new_err(msg),
        odiam::Error::Cap(_) => CapError::new_err(msg),
        odiam::Error::Precondition(_) => PreconditionError::new_err(msg),
        _ => OdiamError::new_err(msg),
    }
}

fn finite(d: Distance) -> Option<usize> {
    d.finite()
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGraph(graph::UndirectedGraph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::UndirectedGraph::new(n, edges)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        Self(graph::UndirectedGraph::complete(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        graph::UndirectedGraph::cycle(n).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn petersen() -> Self {
        Self(graph::UndirectedGraph::petersen())
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        format::parse_edge_list(text).map(Self).map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        format::parse_graph6(text).map(Self).map_err(to_py)
    }

    fn to_edge_list(&self) -> String {
        format::serialize_edge_list(&self.0)
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.0.order() {
            return Err(OdiamError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.0.neighbors(v).to_vec())
    }

    fn bridges(&self) -> Vec<(usize, usize)> {
        graph::find_bridges(&self.0).into_iter().collect()
    }

    fn is_bridgeless(&self) -> bool {
        graph::is_bridgeless(&self.0)
    }

    fn canonical_code<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyBytes>> {
        let code = oracle::canonical_code(&self.0).map_err(to_py)?;
        Ok(PyBytes::new(py, &code))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.order(), self.0.size())
    }
}

/// One direction per edge of a base graph.
#[pyclass(name = "Orientation", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
pub struct PyOrientation(graph::Orientation);

#[pymethods]
impl PyOrientation {
    #[new]
    fn new(graph: &PyGraph, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        graph::Orientation::from_arcs(graph.0.clone(), arcs)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_arc_list(text: &str) -> PyResult<Self> {
        format::parse_arc_list(text).map(Self).map_err(to_py)
    }

    fn to_arc_list(&self) -> String {
        format::serialize_arc_list(&self.0)
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.0.arcs().collect()
    }

    fn base(&self) -> PyGraph {
        PyGraph(self.0.base().clone())
    }

    /// `None` when some vertex cannot reach another.
    fn diameter(&self) -> Option<usize> {
        finite(graph::diameter(&self.0))
    }

    fn is_strongly_connected(&self) -> bool {
        graph::is_strongly_connected(&self.0)
    }

    fn __repr__(&self) -> String {
        format!(
            "Orientation(n={}, diameter={})",
            self.0.order(),
            graph::diameter(&self.0)
        )
    }
}

/// Result of [`orient_bounded`].
#[pyclass(name = "UpperCertificate", frozen, get_all)]
pub struct PyUpperCertificate {
    orientation: PyOrientation,
    diameter: Option<usize>,
    method: String,
    attempts: usize,
}

#[pymethods]
impl PyUpperCertificate {
    fn __repr__(&self) -> String {
        format!(
            "UpperCertificate(method={:?}, diameter={}, attempts={})",
            self.method,
            self.diameter.map_or("None".to_string(), |d| d.to_string()),
            self.attempts
        )
    }
}

#[pyfunction]
fn strong_orientation(g: &PyGraph) -> PyResult<PyOrientation> {
    graph::strong_orientation(&g.0)
        .map(PyOrientation)
        .map_err(to_py)
}

/// Orientation of diameter at most `n - 2`; needs `n >= 5` and `m >= n + 3`.
#[pyfunction]
fn orient_bounded(py: Python<'_>, g: &PyGraph) -> PyResult<PyUpperCertificate> {
    let cert = py.detach(|| orient::orient_bounded(&g.0)).map_err(to_py)?;
    Ok(PyUpperCertificate {
        diameter: finite(cert.diameter),
        method: cert.method.name(),
        attempts: cert.attempts,
        orientation: PyOrientation(cert.orientation),
    })
}

/// Exact oriented diameter and a witness; `None` for graphs with a bridge.
#[pyfunction]
#[pyo3(signature = (g, cap = None))]
fn oriented_diameter(
    py: Python<'_>,
    g: &PyGraph,
    cap: Option<usize>,
) -> PyResult<(Option<usize>, PyOrientation)> {
    let cap = cap.unwrap_or(oracle::DEFAULT_CAP);
    let od = py
        .detach(|| oracle::oriented_diameter_with_cap(&g.0, cap))
        .map_err(to_py)?;
    Ok((finite(od.diameter), PyOrientation(od.witness)))
}

#[pyfunction]
fn verify_lower_bound<'py>(py: Python<'py>, g: &PyGraph, d: usize) -> PyResult<Bound<'py, PyDict>> {
    let cert = py
        .detach(|| oracle::verify_lower_bound(&g.0, d))
        .map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("threshold", cert.threshold)?;
    out.set_item("orientations_examined", cert.orientations_examined)?;
    out.set_item("minimum_diameter", finite(cert.minimum_diameter))?;
    out.set_item("valid", cert.is_valid())?;
    out.set_item("witness", PyOrientation(cert.witness))?;
    Ok(out)
}

#[pyfunction]
fn build_gnd(n: usize, d: usize) -> PyResult<PyGraph> {
    constructions::build_gnd(n, d)
        .map(|(g, _)| PyGraph(g))
        .map_err(to_py)
}

#[pyfunction]
fn build_h(n: usize) -> PyResult<PyGraph> {
    constructions::build_h(n)
        .map(|(g, _)| PyGraph(g))
        .map_err(to_py)
}

#[pyfunction]
fn random_bridgeless(n: usize, edge_probability: f64, seed: u64) -> PyResult<PyGraph> {
    oracle::random_bridgeless(n, edge_probability, seed)
        .map(PyGraph)
        .map_err(to_py)
}

#[pyfunction]
fn enumerate_bridgeless(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(oracle::enumerate_bridgeless(n)
        .map_err(to_py)?
        .into_iter()
        .map(PyGraph)
        .collect())
}

/// Empirical thresholds: maps each `d` to the least forcing edge count, with
/// `None` meaning every size works and `-1` meaning none does.
#[pyfunction]
#[pyo3(signature = (n, d_values, extended = false))]
fn sweep<'py>(
    py: Python<'py>,
    n: usize,
    d_values: Vec<usize>,
    extended: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let opts = SweepOptions {
        extended,
        ..Default::default()
    };
    let report = py
        .detach(|| oracle::sweep(n, &d_values, &opts))
        .map_err(to_py)?;
    let thresholds = PyDict::new(py);
    let verdicts = PyDict::new(py);
    for t in &report.thresholds {
        let value: Option<i64> = match t.threshold {
            Threshold::Vacuous => None,
            Threshold::Finite(m) => Some(m as i64),
            Threshold::Unbounded => Some(-1),
        };
        thresholds.set_item(t.d, value)?;
        if let Some(v) = &t.verdict {
            let name = match v {
                oracle::Verdict::Agrees { .. } => "agrees",
                oracle::Verdict::UpperFails { .. } => "upper-fails",
                oracle::Verdict::LowerFails { .. } => "lower-fails",
            };
            verdicts.set_item(t.d, name)?;
        }
    }
    let out = PyDict::new(py);
    out.set_item("n", report.n)?;
    out.set_item("classes", report.classes.len())?;
    out.set_item("thresholds", thresholds)?;
    out.set_item("verdicts", verdicts)?;
    Ok(out)
}

#[pymodule]
fn pyodiam(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add_class::<PyUpperCertificate>()?;
    m.add("OdiamError", py.get_type::<OdiamError>())?;
    m.add("BridgeError", py.get_type::<BridgeError>())?;
    m.add("CapError", py.get_type::<CapError>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    m.add_function(wrap_pyfunction!(strong_orientation, m)?)?;
    m.add_function(wrap_pyfunction!(orient_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(oriented_diameter, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(build_gnd, m)?)?;
    m.add_function(wrap_pyfunction!(build_h, m)?)?;
    m.add_function(wrap_pyfunction!(random_bridgeless, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_bridgeless, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}
