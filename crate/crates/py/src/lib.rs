//! Python bindings: polynomials, Pisot records, enumeration and the
//! conjugate-bound reports. Structured results are returned as plain
//! dictionaries built from their JSON form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use pisot_core::conjecture::{self, AntiPisot};
use pisot_core::error::Error;
use pisot_core::families::{self, FamilyId, FamilyRoot, KappaSeries, TailBound};
use pisot_core::intpoly::IntPoly;
use pisot_core::pisot::{
    self as engine, Classification, EnumerateOptions, PisotRecord as CoreRecord,
};
use pisot_core::rootlab;
use pyo3::exceptions::{PyArithmeticError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyFloat, PyString};
use serde::Serialize;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::PrecisionExhausted(_) => PyArithmeticError::new_err(e.to_string()),
        Error::BudgetExceeded(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn to_py<T: Serialize>(py: Python<'_>, v: &T) -> PyResult<Py<PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (s,))?.unbind())
}

/// Integer polynomial; built from `"x^2 - x - 1"` or a coefficient list with
/// the constant term first.
#[pyclass(name = "Poly", module = "pisot_py", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Poly {
    inner: IntPoly,
}

fn poly_arg(obj: &Bound<'_, PyAny>) -> PyResult<IntPoly> {
    if let Ok(p) = obj.cast::<Poly>() {
        return Ok(p.get().inner.clone());
    }
    if let Ok(s) = obj.cast::<PyString>() {
        return IntPoly::parse(s.to_str()?).map_err(py_err);
    }
    let coeffs: Vec<BigInt> = obj.extract()?;
    Ok(IntPoly::new(coeffs))
}

#[pymethods]
impl Poly {
    #[new]
    fn new(spec: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Poly {
            inner: poly_arg(spec)?,
        })
    }

    /// Coefficients, constant term first.
    #[getter]
    fn coeffs(&self) -> Vec<BigInt> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.deg()
    }

    fn __call__(&self, x: f64) -> f64 {
        self.inner.eval_f64(x)
    }

    fn reciprocal(&self) -> PyResult<Poly> {
        Ok(Poly {
            inner: self.inner.reciprocal().map_err(py_err)?,
        })
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly('{}')", self.inner)
    }
}

/// A Pisot number with its minimal polynomial and certified conjugates.
#[pyclass(name = "PisotRecord", module = "pisot_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PisotRecord {
    inner: CoreRecord,
}

#[pymethods]
impl PisotRecord {
    #[getter]
    fn q(&self) -> f64 {
        self.inner.q_f64()
    }

    #[getter]
    fn poly(&self) -> Poly {
        Poly {
            inner: self.inner.poly.clone(),
        }
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m
    }

    #[getter]
    fn is_unit(&self) -> bool {
        self.inner.is_unit
    }

    /// `(re, im, radius)` for every conjugate.
    #[getter]
    fn conjugates(&self) -> Vec<(f64, f64, f64)> {
        self.inner
            .conjugates()
            .map(|d| (d.re(), d.im(), d.radius_f64()))
            .collect()
    }

    #[getter]
    fn min_conjugate_modulus(&self) -> Option<f64> {
        self.inner.min_conjugate_modulus().map(|b| b.value)
    }

    fn to_dict(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "PisotRecord(q={:.12}, poly='{}')",
            self.inner.q_f64(),
            self.inner.poly
        )
    }
}

fn rational_arg(obj: &Bound<'_, PyAny>) -> PyResult<BigRational> {
    if let Ok(f) = obj.cast::<PyFloat>() {
        return BigRational::from_float(f.value())
            .ok_or_else(|| PyValueError::new_err("endpoint must be finite"));
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(BigRational::from_integer(n));
    }
    let s: String = obj.extract()?;
    BigRational::from_str(s.trim())
        .map_err(|_| PyValueError::new_err(format!("bad rational `{s}`")))
}

fn record_arg(obj: &Bound<'_, PyAny>, precision: u32) -> PyResult<CoreRecord> {
    if let Ok(r) = obj.cast::<PisotRecord>() {
        return Ok(r.get().inner.clone());
    }
    let p = poly_arg(obj)?;
    match engine::classify_pisot(&p, precision).map_err(py_err)? {
        Classification::Pisot(r) => Ok(*r),
        Classification::NotPisot(reason) => Err(PyValueError::new_err(format!(
            "{p} is not Pisot: {reason:?}"
        ))),
        Classification::Undecided => Err(PyArithmeticError::new_err(format!(
            "classification of {p} is undecided"
        ))),
    }
}

/// The Pisot record of a polynomial, or `None` when it does not define one.
#[pyfunction]
#[pyo3(signature = (poly, precision = 128))]
fn classify(poly: &Bound<'_, PyAny>, precision: u32) -> PyResult<Option<PisotRecord>> {
    let p = poly_arg(poly)?;
    match engine::classify_pisot(&p, precision).map_err(py_err)? {
        Classification::Pisot(r) => Ok(Some(PisotRecord { inner: *r })),
        Classification::NotPisot(_) => Ok(None),
        Classification::Undecided => Err(PyArithmeticError::new_err(
            "classification undecided at the precision cap",
        )),
    }
}

/// All Pisot numbers in the open interval `(a, b)` up to `max_degree`.
#[pyfunction]
#[pyo3(signature = (a, b, max_degree, precision = 128, node_budget = None))]
fn enumerate(
    py: Python<'_>,
    a: &Bound<'_, PyAny>,
    b: &Bound<'_, PyAny>,
    max_degree: usize,
    precision: u32,
    node_budget: Option<u64>,
) -> PyResult<Vec<PisotRecord>> {
    let (a, b) = (rational_arg(a)?, rational_arg(b)?);
    let mut opts = EnumerateOptions {
        precision,
        ..EnumerateOptions::default()
    };
    if let Some(n) = node_budget {
        opts.node_budget = n;
    }
    let e = py
        .detach(|| engine::enumerate_pisot_with(&a, &b, max_degree, &opts))
        .map_err(py_err)?;
    if !e.complete {
        return Err(py_err(Error::BudgetExceeded(e.nodes)));
    }
    Ok(e.records
        .into_iter()
        .map(|inner| PisotRecord { inner })
        .collect())
}

/// `c_m` as a float.
#[pyfunction]
fn c_threshold(m: u64) -> PyResult<f64> {
    Ok(conjecture::c_threshold(m).map_err(py_err)?.value.value)
}

/// Conjugate-bound report for a record or polynomial.
#[pyfunction]
#[pyo3(signature = (record, precision = 128))]
fn verify(py: Python<'_>, record: &Bound<'_, PyAny>, precision: u32) -> PyResult<Py<PyAny>> {
    let rec = record_arg(record, precision)?;
    to_py(
        py,
        &conjecture::verify_conjecture(&rec, precision).map_err(py_err)?,
    )
}

/// Greedy expansion of 1 in the Pisot base.
#[pyfunction]
#[pyo3(signature = (record, max_steps = 2000, precision = 128))]
fn greedy_expansion(
    py: Python<'_>,
    record: &Bound<'_, PyAny>,
    max_steps: usize,
    precision: u32,
) -> PyResult<Py<PyAny>> {
    let rec = record_arg(record, precision)?;
    to_py(py, &engine::greedy_expansion(&rec, max_steps))
}

/// Smallest root modulus of `x^r - x^(r-1) + 1` (`"A"`) or `x^r - x + 1`
/// (`"B"`).
#[pyfunction]
#[pyo3(signature = (series, r, precision = 128))]
fn kappa(series: &str, r: u32, precision: u32) -> PyResult<f64> {
    let s = match series {
        "A" | "a" => KappaSeries::A,
        "B" | "b" => KappaSeries::B,
        _ => return Err(PyValueError::new_err("series must be 'A' or 'B'")),
    };
    Ok(families::kappa(s, r, precision).map_err(py_err)?.value)
}

/// Polynomial of a family member such as `"PhiA(r=3,n=5,+)"`.
#[pyfunction]
fn family_poly(id: &str) -> PyResult<Poly> {
    let id: FamilyId = id.parse().map_err(py_err)?;
    id.validate().map_err(py_err)?;
    Ok(Poly {
        inner: families::family_poly(&id),
    })
}

/// Pisot root of a family member in `(1, 2)`, or `None`.
#[pyfunction]
#[pyo3(signature = (id, precision = 128))]
fn family_pisot_root(id: &str, precision: u32) -> PyResult<Option<PisotRecord>> {
    let id: FamilyId = id.parse().map_err(py_err)?;
    match families::family_pisot_root(&id, precision).map_err(py_err)? {
        FamilyRoot::Pisot(r) => Ok(Some(PisotRecord { inner: *r })),
        FamilyRoot::NoPisotRoot(_) => Ok(None),
        FamilyRoot::Undecided => Err(PyArithmeticError::new_err(
            "family root undecided at the precision cap",
        )),
    }
}

/// Exponent from which `f x^n + g` has the sign of `g` at `+-c_m`. `f` may
/// be a polynomial or an integer height.
#[pyfunction]
fn compute_n0(
    py: Python<'_>,
    f: &Bound<'_, PyAny>,
    g: &Bound<'_, PyAny>,
    m: u64,
) -> PyResult<Py<PyAny>> {
    let tail = match f.extract::<u64>() {
        Ok(h) => TailBound::Height(h),
        Err(_) => TailBound::Poly(poly_arg(f)?),
    };
    let c = conjecture::c_threshold(m).map_err(py_err)?;
    to_py(
        py,
        &families::compute_n0(&tail, &poly_arg(g)?, &c.exact).map_err(py_err)?,
    )
}

/// Anti-Pisot ratio report, or `None` when there is no admissible pair.
#[pyfunction]
#[pyo3(signature = (poly, precision = 128))]
fn anti_pisot_report(
    py: Python<'_>,
    poly: &Bound<'_, PyAny>,
    precision: u32,
) -> PyResult<Option<Py<PyAny>>> {
    match conjecture::anti_pisot_report(&poly_arg(poly)?, precision).map_err(py_err)? {
        AntiPisot::Report(r) => Ok(Some(to_py(py, &r)?)),
        AntiPisot::NotAntiPisot => Ok(None),
    }
}

/// Smallest conjugate modulus over Pisot numbers in `(m, m + 1)`.
#[pyfunction]
#[pyo3(signature = (m, max_degree, units_only = true))]
fn scan_interval(
    py: Python<'_>,
    m: u64,
    max_degree: usize,
    units_only: bool,
) -> PyResult<Py<PyAny>> {
    let row = py
        .detach(|| conjecture::scan_interval(m, max_degree, units_only))
        .map_err(py_err)?;
    to_py(py, &row)
}

/// Number of roots with `|z - center| < radius`; arguments are rationals.
#[pyfunction]
#[pyo3(signature = (poly, radius, center = None, precision = 128))]
fn count_roots_in_disk(
    poly: &Bound<'_, PyAny>,
    radius: &Bound<'_, PyAny>,
    center: Option<&Bound<'_, PyAny>>,
    precision: u32,
) -> PyResult<usize> {
    let zero = BigRational::from_integer(BigInt::from(0));
    let c = center
        .map(rational_arg)
        .transpose()?
        .unwrap_or_else(|| zero.clone());
    rootlab::count_roots_in_disk(
        &poly_arg(poly)?,
        &c,
        &zero,
        &rational_arg(radius)?,
        precision,
    )
    .map_err(py_err)
}

#[pymodule]
fn pisot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Poly>()?;
    m.add_class::<PisotRecord>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(c_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(greedy_expansion, m)?)?;
    m.add_function(wrap_pyfunction!(kappa, m)?)?;
    m.add_function(wrap_pyfunction!(family_poly, m)?)?;
    m.add_function(wrap_pyfunction!(family_pisot_root, m)?)?;
    m.add_function(wrap_pyfunction!(compute_n0, m)?)?;
    m.add_function(wrap_pyfunction!(anti_pisot_report, m)?)?;
    m.add_function(wrap_pyfunction!(scan_interval, m)?)?;
    m.add_function(wrap_pyfunction!(count_roots_in_disk, m)?)?;
    Ok(())
}
