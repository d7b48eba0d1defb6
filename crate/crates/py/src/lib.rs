//! Python bindings: the graph type plus the main solvers, constructive
//! colourings, classification and enumeration.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use distchrom::constructive;
use distchrom::corpus;
use distchrom::exact;
use distchrom::graph::{self, class_profile};
use distchrom::symmetry;

fn to_py_err(e: distchrom::Error) -> PyErr {
    match e {
        distchrom::Error::Internal(_) | distchrom::Error::TheoremViolation(_) => {
            PyRuntimeError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// An immutable simple undirected graph on at most 64 vertices.
#[pyclass(name = "Graph", frozen, from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: graph::Graph,
}

#[pymethods]
impl PyGraph {
    /// Build from a vertex count and an edge list.
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::Graph::from_edges(n, &edges).map_err(to_py_err)?,
        })
    }

    /// Parse a graph6 line.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_graph6(text.as_bytes()).map_err(to_py_err)?,
        })
    }

    fn graph6(&self) -> PyResult<String> {
        graph::write_graph6_string(&self.inner).map_err(to_py_err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn clique_number(&self) -> usize {
        self.inner.clique_number()
    }

    fn independence_number(&self) -> usize {
        self.inner.independence_number()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner == other.inner
    }
}

/// Exact invariants plus a witness distinguishing colouring.
#[pyfunction]
fn solve<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let r = exact::distinguishing_chromatic_number(&g.inner).map_err(to_py_err)?;
    let extremal = constructive::classify_extremal(&g.inner).map_err(to_py_err)?;
    let out = PyDict::new(py);
    out.set_item("chi", r.chi)?;
    out.set_item("chi_D", r.chi_d)?;
    out.set_item("omega", r.omega)?;
    out.set_item("alpha", r.alpha)?;
    out.set_item("delta", r.delta)?;
    out.set_item("witness", r.witness.as_slice().to_vec())?;
    out.set_item("extremal", extremal.render())?;
    Ok(out)
}

/// A distinguishing colouring within `cap` colours, or None.
#[pyfunction]
fn solve_capped(g: &PyGraph, cap: usize) -> PyResult<Option<Vec<u32>>> {
    Ok(exact::distinguishing_chromatic_capped(&g.inner, cap, None)
        .map_err(to_py_err)?
        .map(|c| c.as_slice().to_vec()))
}

#[pyfunction]
fn chromatic_number(g: &PyGraph) -> PyResult<usize> {
    exact::chromatic_number(&g.inner).map_err(to_py_err)
}

#[pyfunction]
fn distinguishing_chromatic_index(g: &PyGraph) -> PyResult<usize> {
    exact::distinguishing_chromatic_index(&g.inner).map_err(to_py_err)
}

fn colouring_from_vec(colours: Vec<u32>) -> PyResult<symmetry::Colouring> {
    symmetry::Colouring::new(colours).map_err(to_py_err)
}

#[pyfunction]
fn is_proper(g: &PyGraph, colours: Vec<u32>) -> PyResult<bool> {
    symmetry::is_proper(&g.inner, &colouring_from_vec(colours)?).map_err(to_py_err)
}

#[pyfunction]
fn is_distinguishing(g: &PyGraph, colours: Vec<u32>) -> PyResult<bool> {
    symmetry::is_distinguishing(&g.inner, &colouring_from_vec(colours)?).map_err(to_py_err)
}

/// Order of the colour-preserving automorphism group (full group when no
/// colouring is given).
#[pyfunction]
#[pyo3(signature = (g, colours=None))]
fn automorphism_order(g: &PyGraph, colours: Option<Vec<u32>>) -> PyResult<usize> {
    let c = colours.map(colouring_from_vec).transpose()?;
    Ok(symmetry::automorphisms(&g.inner, c.as_ref())
        .map_err(to_py_err)?
        .order)
}

#[pyfunction]
fn canonical_graph6(g: &PyGraph) -> PyResult<String> {
    let bytes = symmetry::canonical_form(&g.inner).map_err(to_py_err)?;
    Ok(String::from_utf8(bytes).expect("graph6 is ascii"))
}

#[pyfunction]
fn classify(g: &PyGraph) -> PyResult<(Vec<String>, String)> {
    let profile = class_profile(&g.inner);
    let tag = constructive::classify_extremal(&g.inner).map_err(to_py_err)?;
    Ok((
        profile.flag_names().iter().map(|s| s.to_string()).collect(),
        tag.render(),
    ))
}

#[pyfunction]
fn colour_c4_free(g: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(constructive::colour_c4_free(&g.inner)
        .map_err(to_py_err)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn colour_chordal(g: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(constructive::colour_chordal(&g.inner)
        .map_err(to_py_err)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn colour_2k2_free(g: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(constructive::colour_2k2_free(&g.inner)
        .map_err(to_py_err)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn colour_claw_free(g: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(constructive::colour_claw_free(&g.inner)
        .map_err(to_py_err)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn colour_claw_diamond_free(g: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(constructive::colour_claw_diamond_free(&g.inner)
        .map_err(to_py_err)?
        .as_slice()
        .to_vec())
}

#[pyfunction]
fn module_partition(g: &PyGraph) -> PyResult<Vec<Vec<usize>>> {
    Ok(constructive::module_partition(&g.inner)
        .map_err(to_py_err)?
        .parts)
}

#[pyfunction]
fn line_graph(g: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: constructive::line_graph(&g.inner).map_err(to_py_err)?,
    })
}

#[pyfunction]
fn line_root(g: &PyGraph) -> PyResult<Option<PyGraph>> {
    Ok(constructive::line_root(&g.inner)
        .map_err(to_py_err)?
        .map(|h| PyGraph { inner: h }))
}

/// One representative per isomorphism class of connected graphs on n
/// vertices.
#[pyfunction]
fn enumerate_connected(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(corpus::enumerate_connected(n)
        .map_err(to_py_err)?
        .into_iter()
        .map(|inner| PyGraph { inner })
        .collect())
}

#[pymodule]
fn distchrom_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solve_capped, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(distinguishing_chromatic_index, m)?)?;
    m.add_function(wrap_pyfunction!(is_proper, m)?)?;
    m.add_function(wrap_pyfunction!(is_distinguishing, m)?)?;
    m.add_function(wrap_pyfunction!(automorphism_order, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_graph6, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(colour_c4_free, m)?)?;
    m.add_function(wrap_pyfunction!(colour_chordal, m)?)?;
    m.add_function(wrap_pyfunction!(colour_2k2_free, m)?)?;
    m.add_function(wrap_pyfunction!(colour_claw_free, m)?)?;
    m.add_function(wrap_pyfunction!(colour_claw_diamond_free, m)?)?;
    m.add_function(wrap_pyfunction!(module_partition, m)?)?;
    m.add_function(wrap_pyfunction!(line_graph, m)?)?;
    m.add_function(wrap_pyfunction!(line_root, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_connected, m)?)?;
    m.add("SOLVER_VERSION", distchrom::SOLVER_VERSION)?;
    Ok(())
}
