//! Python bindings for `selfloop-core`.
//!
//! Build with `maturin develop` (see `pyproject.toml`) or
//! `cargo build -p selfloop-py --features extension-module`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use selfloop_core::spectral::{self, TwistedMoments, DEFAULT_RST};
use selfloop_core::{census, families, format, oracle, walks};
use selfloop_core::{BoundRecord, Family, FamilySpec, LoopPlacement, SelfLoopGraph};

fn err(e: selfloop_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple graph with loops on a subset of its vertices.
#[pyclass(name = "Graph", module = "selfloop", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: SelfLoopGraph,
}

fn bound_dict<'py>(py: Python<'py>, r: &BoundRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("name", &r.name)?;
    d.set_item("lhs", r.lhs)?;
    d.set_item("rhs", r.rhs)?;
    d.set_item("slack", r.slack)?;
    d.set_item("holds", r.holds)?;
    Ok(d)
}

fn bound_list<'py>(py: Python<'py>, records: &[BoundRecord]) -> PyResult<Vec<Bound<'py, PyDict>>> {
    records.iter().map(|r| bound_dict(py, r)).collect()
}

impl PyGraph {
    fn moments(&self) -> PyResult<TwistedMoments> {
        TwistedMoments::new(&self.inner).map_err(err)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new(), loops = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>, loops: Vec<usize>) -> PyResult<Self> {
        let inner = SelfLoopGraph::build(order, &edges, &loops).map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn sigma(&self) -> usize {
        self.inner.sigma()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn loops(&self) -> Vec<usize> {
        self.inner.loops()
    }

    #[getter]
    fn connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn adjacency(&self) -> Vec<Vec<u8>> {
        self.inner.adjacency().to_rows()
    }

    /// `{"w1": .., "w2": .., "w3": .., "w4": ..}` from the local formulas.
    fn walk_counts<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let w = walks::walk_counts(&self.inner).map_err(err)?;
        let d = PyDict::new(py);
        for k in 1..=4 {
            d.set_item(format!("w{k}"), w.get(k))?;
        }
        Ok(d)
    }

    fn census<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = census::census(&self.inner);
        let d = PyDict::new(py);
        d.set_item("zagreb1", c.zagreb1)?;
        d.set_item("degree_sum_loops", c.degree_sum_loops)?;
        d.set_item("n1", c.n1.clone())?;
        d.set_item("n2", c.n2.clone())?;
        d.set_item("n1_sum_loops", c.n1_sum_loops)?;
        d.set_item("triangles", c.triangles)?;
        d.set_item("tri_loops", c.tri_loops.to_vec())?;
        d.set_item("c4_not_k4", c.c4_not_k4)?;
        d.set_item("k4_count", c.k4_count)?;
        d.set_item("four_cycles_total", c.four_cycles_total())?;
        Ok(d)
    }

    /// Eigenvalues in descending order.
    fn eigenvalues(&self) -> PyResult<Vec<f64>> {
        Ok(spectral::eigenvalues(&self.inner).map_err(err)?.eigenvalues)
    }

    fn spectral_moment(&self, k: usize) -> PyResult<u64> {
        spectral::spectral_moment(&self.inner, k).map_err(err)
    }

    #[pyo3(signature = (q, k = 1))]
    fn twisted_moment(&self, q: f64, k: usize) -> PyResult<f64> {
        spectral::twisted_moment(&self.inner, q, k).map_err(err)
    }

    fn energy(&self) -> PyResult<f64> {
        spectral::energy(&self.inner).map_err(err)
    }

    fn m3_closed_form(&self) -> PyResult<f64> {
        spectral::m3_closed_form(&self.inner).map_err(err)
    }

    fn m4_closed_form(&self) -> PyResult<f64> {
        spectral::m4_closed_form(&self.inner).map_err(err)
    }

    fn cauchy_schwarz<'py>(&self, py: Python<'py>, p: f64, q: f64) -> PyResult<Bound<'py, PyDict>> {
        bound_dict(py, &spectral::verify_cauchy_schwarz(&self.moments()?, p, q).map_err(err)?)
    }

    fn mcclelland<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        bound_dict(py, &spectral::mcclelland_bound(&self.moments()?))
    }

    fn ratio_chain<'py>(&self, py: Python<'py>, q_max: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
        bound_list(py, &spectral::verify_ratio_chain(&self.moments()?, q_max).map_err(err)?)
    }

    #[pyo3(signature = (rst = None))]
    fn energy_lower_bounds<'py>(
        &self,
        py: Python<'py>,
        rst: Option<Vec<(f64, f64, f64)>>,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let rst = rst.unwrap_or_else(|| DEFAULT_RST.to_vec());
        bound_list(py, &spectral::energy_lower_bounds(&self.moments()?, &rst).map_err(err)?)
    }

    /// The canonical graph-file text.
    fn to_text(&self) -> String {
        format::serialize(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, edges={:?}, loops={:?})",
            self.inner.order(),
            self.inner.edges(),
            self.inner.loops()
        )
    }
}

#[pyfunction]
fn parse_graph(text: &str) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: format::parse(text).map_err(err)?,
    })
}

#[pyfunction]
fn serialize(graph: &PyGraph) -> String {
    format::serialize(&graph.inner)
}

fn family_spec(
    family: &str,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    loops: Vec<usize>,
    parts: Option<(usize, usize)>,
) -> PyResult<FamilySpec> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| PyValueError::new_err(format!("family {family} needs {flag}")))
    };
    let family = match family {
        "complete" => Family::Complete { n: need(n, "n")? },
        "complete_bipartite" | "complete-bipartite" => Family::CompleteBipartite {
            a: need(a, "a")?,
            b: need(b, "b")?,
        },
        "cycle" => Family::Cycle { n: need(n, "n")? },
        "path" => Family::Path { n: need(n, "n")? },
        "wheel" => Family::Wheel { n: need(n, "n")? },
        "star" => Family::Star { n: need(n, "n")? },
        "kneser" => Family::Kneser { k: need(k, "k")? },
        "petersen" => Family::Petersen,
        other => return Err(PyValueError::new_err(format!("unknown family {other:?}"))),
    };
    let placement = match parts {
        Some((sigma_a, sigma_b)) if loops.is_empty() => LoopPlacement::Parts { sigma_a, sigma_b },
        Some(_) => return Err(PyValueError::new_err("give either loops or parts, not both")),
        None => LoopPlacement::Explicit(loops),
    };
    Ok(FamilySpec::with_placement(family, placement))
}

/// A family graph. `parts=(sigma_a, sigma_b)` loops the first vertices of
/// each side of a complete bipartite graph or star.
#[pyfunction]
#[pyo3(signature = (family, n = None, a = None, b = None, k = None, loops = Vec::new(), parts = None))]
fn generate(
    family: &str,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    loops: Vec<usize>,
    parts: Option<(usize, usize)>,
) -> PyResult<PyGraph> {
    let spec = family_spec(family, n, a, b, k, loops, parts)?;
    Ok(PyGraph {
        inner: families::generate(&spec).map_err(err)?,
    })
}

#[pyfunction]
#[pyo3(signature = (family, n = None, a = None, b = None, k = None, loops = Vec::new(), parts = None))]
fn closed_form_walks(
    family: &str,
    n: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
    k: Option<usize>,
    loops: Vec<usize>,
    parts: Option<(usize, usize)>,
) -> PyResult<(Option<u64>, Option<u64>)> {
    let spec = family_spec(family, n, a, b, k, loops, parts)?;
    Ok((walks::closed_form_w3(&spec).ok(), walks::closed_form_w4(&spec).ok()))
}

#[pyfunction]
fn trace_power(graph: &PyGraph, k: usize) -> PyResult<u64> {
    oracle::trace_power(&graph.inner, k).map_err(err)
}

/// `(total, per_vertex)` by explicit walk enumeration.
#[pyfunction]
fn enumerate_closed_walks(graph: &PyGraph, k: usize) -> PyResult<(u64, Vec<u64>)> {
    let e = oracle::enumerate_closed_walks(&graph.inner, k).map_err(err)?;
    Ok((e.total, e.per_vertex))
}

#[pymodule]
fn selfloop(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(parse_graph, m)?)?;
    m.add_function(wrap_pyfunction!(serialize, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_walks, m)?)?;
    m.add_function(wrap_pyfunction!(trace_power, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_closed_walks, m)?)?;
    Ok(())
}
