//! Python module `pygbessel`.

use gbessel::disk::{GridSpec, Verdict};
use gbessel::starlike::{disk_radius, RadiusQuery};
use gbessel::{Family, SeriesConfig as CoreConfig};
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(pygbessel, GBesselError, PyException);

fn to_py(e: gbessel::Error) -> PyErr {
    GBesselError::new_err(e.to_string())
}

fn family(token: &str) -> PyResult<Family> {
    token.parse().map_err(to_py)
}

#[pyclass(name = "SeriesConfig", from_py_object)]
#[derive(Clone)]
pub struct PySeriesConfig {
    #[pyo3(get, set)]
    pub max_terms: usize,
    #[pyo3(get, set)]
    pub rel_tol: f64,
}

#[pymethods]
impl PySeriesConfig {
    #[new]
    #[pyo3(signature = (max_terms = 200, rel_tol = 1e-16))]
    fn new(max_terms: usize, rel_tol: f64) -> PyResult<Self> {
        CoreConfig::new(max_terms, rel_tol).map_err(to_py)?;
        Ok(PySeriesConfig { max_terms, rel_tol })
    }

    fn __repr__(&self) -> String {
        format!("SeriesConfig(max_terms={}, rel_tol={:e})", self.max_terms, self.rel_tol)
    }
}

impl PySeriesConfig {
    fn core(&self) -> PyResult<CoreConfig> {
        CoreConfig::new(self.max_terms, self.rel_tol).map_err(to_py)
    }
}

fn config(cfg: Option<PySeriesConfig>) -> PyResult<CoreConfig> {
    cfg.map_or(Ok(CoreConfig::default()), |c| c.core())
}

#[pyclass(name = "GBesselParams", from_py_object)]
#[derive(Clone)]
pub struct PyParams {
    inner: gbessel::GBesselParams,
}

#[pymethods]
impl PyParams {
    #[new]
    fn new(a: u32, b: f64, p: f64, c: f64) -> PyResult<Self> {
        Ok(PyParams { inner: gbessel::GBesselParams::new(a, b, p, c).map_err(to_py)? })
    }

    #[getter]
    fn a(&self) -> u32 {
        self.inner.a
    }
    #[getter]
    fn b(&self) -> f64 {
        self.inner.b
    }
    #[getter]
    fn p(&self) -> f64 {
        self.inner.p
    }
    #[getter]
    fn c(&self) -> f64 {
        self.inner.c
    }

    fn __repr__(&self) -> String {
        let p = &self.inner;
        format!("GBesselParams(a={}, b={}, p={}, c={})", p.a, p.b, p.p, p.c)
    }
}

#[pyclass(name = "RootResult", frozen, skip_from_py_object)]
pub struct PyRoot {
    #[pyo3(get)]
    value: f64,
    #[pyo3(get)]
    residual: f64,
    #[pyo3(get)]
    bracket_lo: f64,
    #[pyo3(get)]
    bracket_hi: f64,
    #[pyo3(get)]
    iterations: usize,
    #[pyo3(get)]
    equation_id: String,
}

#[pymethods]
impl PyRoot {
    fn __repr__(&self) -> String {
        format!("RootResult(value={}, residual={:e}, equation_id={:?})", self.value, self.residual, self.equation_id)
    }
}

impl From<gbessel::RootResult> for PyRoot {
    fn from(r: gbessel::RootResult) -> Self {
        PyRoot {
            value: r.value,
            residual: r.residual,
            bracket_lo: r.bracket_lo,
            bracket_hi: r.bracket_hi,
            iterations: r.iterations,
            equation_id: r.equation_id.token().to_string(),
        }
    }
}

#[pyfunction]
#[pyo3(signature = (params, z, cfg = None))]
fn eval_gbessel(params: &PyParams, z: Complex64, cfg: Option<PySeriesConfig>) -> PyResult<Complex64> {
    gbessel::eval_gbessel(&params.inner, z, &config(cfg)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (nu, z, cfg = None))]
fn eval_bessel_j(nu: f64, z: Complex64, cfg: Option<PySeriesConfig>) -> PyResult<Complex64> {
    gbessel::eval_bessel_j(nu, z, &config(cfg)?).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (nu, x, cfg = None))]
fn eval_bessel_i(nu: f64, x: f64, cfg: Option<PySeriesConfig>) -> PyResult<f64> {
    gbessel::eval_bessel_i(nu, x, &config(cfg)?).map_err(to_py)
}

#[pyfunction]
fn bessel_j_zero(nu: f64, n: usize) -> PyResult<f64> {
    Ok(gbessel::bessel_j_zero(nu, n).map_err(to_py)?.value)
}

#[pyfunction]
fn condition_asum(a: u32, nu: f64, beta: f64) -> PyResult<bool> {
    gbessel::condition_asum(a, nu, beta).map_err(to_py)
}

/// Root of the radius equation for family "f", "g" or "h".
#[pyfunction]
fn radius(family_token: &str, a: u32, nu: f64, beta: f64) -> PyResult<PyRoot> {
    let q = RadiusQuery::new(a, nu, beta, family(family_token)?).map_err(to_py)?;
    Ok(gbessel::radius(&q).map_err(to_py)?.into())
}

/// Disk radius implied by a radius root, clipped to the unit disk.
#[pyfunction]
fn in_disk_radius(family_token: &str, value: f64) -> PyResult<f64> {
    Ok(gbessel::in_disk_radius(family(family_token)?, value))
}

/// Disk radius implied by a radius root, not clipped.
#[pyfunction]
fn unclipped_disk_radius(family_token: &str, value: f64) -> PyResult<f64> {
    Ok(disk_radius(family(family_token)?, value))
}

#[pyfunction]
fn threshold_nu_f(a: u32, beta: f64) -> PyResult<PyRoot> {
    Ok(gbessel::threshold_nu_f(a, beta).map_err(to_py)?.into())
}

#[pyfunction]
fn threshold_nu_g(a: u32, beta: f64) -> PyResult<PyRoot> {
    Ok(gbessel::threshold_nu_g(a, beta).map_err(to_py)?.into())
}

#[pyfunction]
fn nu_tilde() -> PyResult<PyRoot> {
    Ok(gbessel::nu_tilde().map_err(to_py)?.into())
}

#[pyfunction]
fn starlike_functional(a: u32, nu: f64, beta: f64, z: Complex64, family_token: &str) -> PyResult<f64> {
    gbessel::starlike_functional(a, nu, beta, z, family(family_token)?).map_err(to_py)
}

/// Returns a dict with minimum, argmin (complex), verdict ("PASS"/"FAIL"),
/// samples and heuristic.
#[pyfunction]
#[pyo3(signature = (a, nu, beta, radius, family_token, n_circles = 32, n_angles = 720))]
#[allow(clippy::too_many_arguments)]
fn verify_starlike_on_disk<'py>(
    py: Python<'py>,
    a: u32,
    nu: f64,
    beta: f64,
    radius: f64,
    family_token: &str,
    n_circles: usize,
    n_angles: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let grid = GridSpec { n_circles, n_angles };
    let fam = family(family_token)?;
    let rep = py
        .detach(|| gbessel::verify_starlike_on_disk(a, nu, beta, radius, grid, fam))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("minimum", rep.minimum)?;
    d.set_item("argmin", Complex64::new(rep.argmin_re, rep.argmin_im))?;
    d.set_item("verdict", if rep.verdict == Verdict::Pass { "PASS" } else { "FAIL" })?;
    d.set_item("samples", rep.samples)?;
    d.set_item("heuristic", rep.heuristic)?;
    d.set_item("radius", rep.radius)?;
    Ok(d)
}

/// Cells of reference table 1-4 as a list of dicts.
#[pyfunction]
fn compute_table<'py>(py: Python<'py>, id: u8) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let tid = gbessel::TableId::from_number(id).map_err(to_py)?;
    let table = py.detach(|| gbessel::compute_table(tid)).map_err(to_py)?;
    table
        .cells
        .iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("a", c.a)?;
            d.set_item("beta", c.beta)?;
            d.set_item("value", c.value)?;
            d.set_item("reference", c.reference)?;
            d.set_item("deviation", c.deviation)?;
            d.set_item("residual", c.residual)?;
            d.set_item("in_disk_radius", c.in_disk_radius)?;
            d.set_item("within_tolerance", c.within_tolerance)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn pygbessel(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("GBesselError", m.py().get_type::<GBesselError>())?;
    m.add_class::<PySeriesConfig>()?;
    m.add_class::<PyParams>()?;
    m.add_class::<PyRoot>()?;
    m.add_function(wrap_pyfunction!(eval_gbessel, m)?)?;
    m.add_function(wrap_pyfunction!(eval_bessel_j, m)?)?;
    m.add_function(wrap_pyfunction!(eval_bessel_i, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_j_zero, m)?)?;
    m.add_function(wrap_pyfunction!(condition_asum, m)?)?;
    m.add_function(wrap_pyfunction!(radius, m)?)?;
    m.add_function(wrap_pyfunction!(in_disk_radius, m)?)?;
    m.add_function(wrap_pyfunction!(unclipped_disk_radius, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_nu_f, m)?)?;
    m.add_function(wrap_pyfunction!(threshold_nu_g, m)?)?;
    m.add_function(wrap_pyfunction!(nu_tilde, m)?)?;
    m.add_function(wrap_pyfunction!(starlike_functional, m)?)?;
    m.add_function(wrap_pyfunction!(verify_starlike_on_disk, m)?)?;
    m.add_function(wrap_pyfunction!(compute_table, m)?)?;
    Ok(())
}
