//! Python bindings: graphs, polynomials, invariants and the basis
//! conversions.

use std::collections::HashMap;

use gpoly_core::equivalence as eq;
use gpoly_core::graph6::{parse_graph6, to_graph6};
use gpoly_core::invariants::{compute as compute_invariant, InvariantValue};
use gpoly_core::search::{search as run_search, SearchOptions};
use gpoly_core::verify::{self, Suite, VerifyOptions};
use gpoly_core::{ComputeOptions, Error, Invariant, Limits, PairPartition, Route};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

create_exception!(gpoly, GpolyError, PyException);
create_exception!(gpoly, ParseError, GpolyError);
create_exception!(gpoly, GuardExceeded, GpolyError);
create_exception!(gpoly, PreconditionError, GpolyError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Parse { .. }
        | Error::Malformed(_)
        | Error::EdgeOutOfRange { .. }
        | Error::VertexOutOfRange { .. } => ParseError::new_err(msg),
        Error::GuardExceeded { .. } => GuardExceeded::new_err(msg),
        Error::Precondition(_) | Error::ContractLoop(_) | Error::Unassigned(_) => {
            PreconditionError::new_err(msg)
        }
    }
}

trait OrPy<T> {
    fn py_err(self) -> PyResult<T>;
}

impl<T> OrPy<T> for Result<T, Error> {
    fn py_err(self) -> PyResult<T> {
        self.map_err(to_py)
    }
}

/// A multigraph with vertex weights. Vertices are numbered from 0.
#[pyclass(module = "gpoly", frozen, from_py_object)]
#[derive(Clone)]
struct Multigraph(gpoly_core::Multigraph);

#[pymethods]
impl Multigraph {
    #[new]
    #[pyo3(signature = (n, edges, weights=None))]
    fn new(n: usize, edges: Vec<(usize, usize)>, weights: Option<Vec<u32>>) -> PyResult<Self> {
        let mut g = gpoly_core::Multigraph::new(n, edges).py_err()?;
        if let Some(w) = weights {
            g = g.with_weights(w).py_err()?;
        }
        Ok(Multigraph(g))
    }

    /// Parses the text edge-list format (1-based endpoints).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        gpoly_core::Multigraph::parse_edge_list(text).py_err().map(Multigraph)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph6(text).py_err().map(Multigraph)
    }

    fn to_edge_list(&self) -> String {
        self.0.to_edge_list()
    }

    fn to_graph6(&self) -> PyResult<String> {
        to_graph6(&self.0).py_err()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.0.edge_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().to_vec()
    }

    #[getter]
    fn weights(&self) -> Vec<u32> {
        self.0.weights().to_vec()
    }

    fn component_count(&self) -> usize {
        self.0.component_count()
    }

    fn rank(&self, subset: Vec<usize>) -> PyResult<usize> {
        self.0.rank(&subset).py_err()
    }

    fn is_loopless(&self) -> bool {
        self.0.is_loopless()
    }

    fn delete_edge(&self, e: usize) -> PyResult<Self> {
        self.0.delete_edge(e).py_err().map(Multigraph)
    }

    fn contract_edge(&self, e: usize) -> PyResult<Self> {
        self.0.contract_edge(e).py_err().map(Multigraph)
    }

    fn __repr__(&self) -> String {
        format!(
            "Multigraph({}, {:?}, weights={:?})",
            self.0.vertex_count(),
            self.0.edges(),
            self.0.weights()
        )
    }
}

/// A polynomial with integer coefficients.
#[pyclass(module = "gpoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct Poly(gpoly_core::Poly);

fn rational(v: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    let num: BigInt = v.getattr("numerator")?.extract()?;
    let den: BigInt = v.getattr("denominator")?.extract()?;
    Ok(BigRational::new(num, den))
}

#[pymethods]
impl Poly {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().py_err().map(Poly)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        gpoly_core::Poly::from_json(text).py_err().map(Poly)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    /// `(monomial, coefficient)` pairs in canonical order.
    fn terms(&self) -> Vec<(String, BigInt)> {
        self.0
            .terms()
            .map(|(m, c)| (m.to_string(), c.clone()))
            .collect()
    }

    fn variables(&self) -> Vec<String> {
        self.0.variables().iter().map(|v| v.to_string()).collect()
    }

    /// Evaluates at `{"x[1]": 2, "y": Fraction(1, 3), ...}`; returns a
    /// `fractions.Fraction`.
    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        values: HashMap<String, Bound<'py, PyAny>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let mut parsed = HashMap::with_capacity(values.len());
        for (k, v) in &values {
            parsed.insert(k.clone(), rational(v)?);
        }
        let r = self
            .0
            .evaluate(|v| parsed.get(&v.to_string()).cloned())
            .py_err()?;
        py.import("fractions")?
            .getattr("Fraction")?
            .call1((r.numer().clone(), r.denom().clone()))
    }

    fn __add__(&self, other: &Poly) -> Poly {
        Poly(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Poly) -> Poly {
        Poly(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Poly) -> Poly {
        Poly(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Poly {
        Poly(-&self.0)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({:?})", self.0.to_string())
    }
}

/// A paired symmetric function as coefficients on `pbar` or `mbar`.
#[pyclass(module = "gpoly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PairedMap(gpoly_core::PairedCoefficientMap);

#[pymethods]
impl PairedMap {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        gpoly_core::PairedCoefficientMap::from_json(text)
            .py_err()
            .map(PairedMap)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    /// `"p"` or `"m"`.
    #[getter]
    fn basis(&self) -> &'static str {
        self.0.basis().tag()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m()
    }

    fn terms(&self) -> Vec<(Vec<(u32, u32)>, BigInt)> {
        self.0
            .iter()
            .map(|(k, c)| (k.pairs().to_vec(), c.clone()))
            .collect()
    }

    fn coefficient(&self, key: Vec<(u32, u32)>) -> BigInt {
        self.0.get(&PairPartition::from_pairs(key))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

fn value_to_py(py: Python<'_>, v: InvariantValue) -> PyResult<Py<PyAny>> {
    Ok(match v {
        InvariantValue::Poly(p) => Py::new(py, Poly(p))?.into_any(),
        InvariantValue::Paired(m) => Py::new(py, PairedMap(m))?.into_any(),
    })
}

fn limits(force: bool) -> Limits {
    Limits {
        force,
        ..Limits::default()
    }
}

/// Computes an invariant by name (`"u"`, `"ubar"`, `"ybar"`, ...).
/// Returns a `Poly`, or a `PairedMap` for `ybar`.
#[pyfunction]
#[pyo3(signature = (invariant, graph, route="definition", truncate=None, force=false))]
fn compute(
    py: Python<'_>,
    invariant: &str,
    graph: &Multigraph,
    route: &str,
    truncate: Option<usize>,
    force: bool,
) -> PyResult<Py<PyAny>> {
    let invariant: Invariant = invariant.parse().py_err()?;
    let route = match route {
        "definition" => Route::Definition,
        "specialization" => Route::Specialization,
        "recurrence" => Route::Recurrence,
        other => return Err(ParseError::new_err(format!("unknown route {other:?}"))),
    };
    let opts = ComputeOptions {
        limits: limits(force),
        truncate,
        route,
    };
    let g = graph.0.clone();
    let r = py
        .detach(|| compute_invariant(invariant, &g, &opts))
        .py_err()?;
    value_to_py(py, r.value)
}

#[pyfunction]
fn ubar_to_ybar(ubar: &Poly) -> PyResult<PairedMap> {
    eq::ubar_to_ybar(&ubar.0).py_err().map(PairedMap)
}

#[pyfunction]
fn ybar_to_ubar(ybar: &PairedMap) -> PyResult<Poly> {
    eq::ybar_to_ubar(&ybar.0).py_err().map(Poly)
}

#[pyfunction]
fn to_augmented_monomial(map: &PairedMap) -> PairedMap {
    PairedMap(eq::to_augmented_monomial(&map.0))
}

#[pyfunction]
fn ybar_to_extended_polychromate(ybar: &PairedMap) -> Poly {
    Poly(eq::ybar_to_extended_polychromate(&ybar.0))
}

#[pyfunction]
fn u_to_polychromate(u: &Poly, n: u32) -> PyResult<Poly> {
    eq::u_to_polychromate(&u.0, n).py_err().map(Poly)
}

/// Buckets graphs by U and reports pairs with different extended U.
/// Returns the report as JSON text.
#[pyfunction]
#[pyo3(signature = (graphs, loopless=false, force=false))]
fn search(py: Python<'_>, graphs: Vec<Multigraph>, loopless: bool, force: bool) -> PyResult<String> {
    let graphs: Vec<_> = graphs.into_iter().map(|g| g.0).collect();
    let opts = SearchOptions {
        limits: limits(force),
        loopless,
    };
    py.detach(|| run_search(&graphs, &opts))
        .py_err()
        .map(|r| r.to_json())
}

/// Runs one verification suite; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite, max_vertices=None, max_edges=None))]
fn run_verify(
    py: Python<'_>,
    suite: &str,
    max_vertices: Option<usize>,
    max_edges: Option<usize>,
) -> PyResult<(bool, String)> {
    let suite: Suite = suite.parse().py_err()?;
    let opts = VerifyOptions {
        max_vertices,
        max_edges,
        ..VerifyOptions::default()
    };
    let report = py.detach(|| verify::run(suite, &opts)).py_err()?;
    Ok((report.passed(), report.to_text()))
}

#[pymodule]
fn gpoly(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<Multigraph>()?;
    m.add_class::<Poly>()?;
    m.add_class::<PairedMap>()?;
    m.add_function(wrap_pyfunction!(compute, m)?)?;
    m.add_function(wrap_pyfunction!(ubar_to_ybar, m)?)?;
    m.add_function(wrap_pyfunction!(ybar_to_ubar, m)?)?;
    m.add_function(wrap_pyfunction!(to_augmented_monomial, m)?)?;
    m.add_function(wrap_pyfunction!(ybar_to_extended_polychromate, m)?)?;
    m.add_function(wrap_pyfunction!(u_to_polychromate, m)?)?;
    m.add_function(wrap_pyfunction!(search, m)?)?;
    m.add("verify", wrap_pyfunction!(run_verify, m)?)?;
    m.add("GpolyError", py.get_type::<GpolyError>())?;
    m.add("ParseError", py.get_type::<ParseError>())?;
    m.add("GuardExceeded", py.get_type::<GuardExceeded>())?;
    m.add("PreconditionError", py.get_type::<PreconditionError>())?;
    Ok(())
}
