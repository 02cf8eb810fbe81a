//! Python bindings for the Hermite/time-frequency toolkit: thin wrappers
//! over the core crate with list/complex conversions and exceptions in
//! place of error enums.

use hermspace::numerics::QuadratureSpec;
use hermspace::phase_space::{HermiteCoeffs, PhasePoint};
use hermspace::zak_gabor::{Lattice2D, RelMode};
use num_complex::Complex64;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use std::f64::consts::PI;

fn to_py(err: hermspace::Error) -> PyErr {
    match err {
        hermspace::Error::Domain(_) => PyValueError::new_err(err.to_string()),
        _ => PyRuntimeError::new_err(err.to_string()),
    }
}

fn spec(tol: f64) -> PyResult<QuadratureSpec> {
    QuadratureSpec::with_tolerance(tol).map_err(to_py)
}

fn coeffs(c: Vec<Complex64>) -> PyResult<HermiteCoeffs> {
    HermiteCoeffs::new(c).map_err(to_py)
}

fn point(x: f64, omega: f64) -> PyResult<PhasePoint> {
    PhasePoint::new(x, omega).map_err(to_py)
}

/// Outcome of a lower <= measured <= upper check.
#[pyclass(name = "BoundReport", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyBoundReport {
    lower: f64,
    measured: f64,
    upper: f64,
    passed: bool,
}

#[pymethods]
impl PyBoundReport {
    fn __repr__(&self) -> String {
        format!(
            "BoundReport(lower={}, measured={}, upper={}, passed={})",
            self.lower,
            self.measured,
            self.upper,
            if self.passed { "True" } else { "False" }
        )
    }
}

impl From<hermspace::BoundReport> for PyBoundReport {
    fn from(r: hermspace::BoundReport) -> Self {
        PyBoundReport {
            lower: r.lower,
            measured: r.measured,
            upper: r.upper,
            passed: r.pass,
        }
    }
}

/// Values of the normalized basis functions h_0..h_n at t.
#[pyfunction]
fn hermite_values(n: usize, t: f64) -> PyResult<Vec<f64>> {
    Ok(hermspace::hermite::hermite_batch(n, t).map_err(to_py)?.values)
}

/// Radius beyond which |h_n| stays below 1e-10.
#[pyfunction]
fn decay_radius(n: usize) -> f64 {
    hermspace::hermite::decay_radius(n)
}

/// Normalized weights e^{-t} t^k / k! for k = 0..n.
#[pyfunction]
fn poisson_weights(t: f64, n: usize) -> PyResult<Vec<f64>> {
    Ok(hermspace::poisson_poly::poisson_weights(t, n)
        .map_err(to_py)?
        .p)
}

/// Angular L1 norm of the weighted partial sum at rate t, order n.
#[pyfunction]
#[pyo3(signature = (t, n, tol=1e-6))]
fn l1_norm(t: f64, n: usize, tol: f64) -> PyResult<f64> {
    hermspace::poisson_poly::l1_norm_pn(t, n, &spec(tol)?).map_err(to_py)
}

/// Checks the logarithmic envelope around the angular L1 norm.
#[pyfunction]
#[pyo3(signature = (t, n, tol=1e-6))]
fn check_sandwich(t: f64, n: usize, tol: f64) -> PyResult<PyBoundReport> {
    Ok(hermspace::poisson_poly::check_sandwich(t, n, &spec(tol)?)
        .map_err(to_py)?
        .into())
}

/// Closed-form coefficient of the shifted Gaussian against basis order n.
#[pyfunction]
fn stft_gaussian(x: f64, omega: f64, n: usize) -> PyResult<Complex64> {
    hermspace::phase_space::stft_hermite_gauss(&point(x, omega)?, n).map_err(to_py)
}

/// Modulation-space norm of an expansion given by complex coefficients.
#[pyfunction]
#[pyo3(signature = (c, p, tol=1e-6))]
fn mp_norm(c: Vec<Complex64>, p: f64, tol: f64) -> PyResult<f64> {
    hermspace::phase_space::mp_norm(&coeffs(c)?, p, &spec(tol)?).map_err(to_py)
}

/// Exact M^p norm of the basis vector e_n.
#[pyfunction]
fn mp_closed_form(n: usize, p: f64) -> PyResult<f64> {
    hermspace::phase_space::mp_hermite_closed_form(n, p).map_err(to_py)
}

/// Exact M^1 norm of e_n.
#[pyfunction]
fn m1_closed_form(n: usize) -> f64 {
    hermspace::phase_space::m1_hermite_closed_form(n)
}

/// Fourth-root growth law the M^1 norms approach.
#[pyfunction]
fn m1_asymptote(n: usize) -> f64 {
    hermspace::phase_space::m1_hermite_asymptote(n)
}

/// M^1 norm of the order-n partial sum applied to its matched probe.
#[pyfunction]
#[pyo3(signature = (n, tol=1e-6))]
fn sn_probe(n: usize, tol: f64) -> PyResult<f64> {
    hermspace::operators::sn_probe_m1(n, &spec(tol)?).map_err(to_py)
}

/// Logarithmic lower bound the probe must clear (after halving).
#[pyfunction]
fn sn_lower_bound(n: usize) -> f64 {
    hermspace::operators::sn_growth_lower_bound(n)
}

/// M^p error of truncating an expansion at the given order.
#[pyfunction]
#[pyo3(signature = (c, cutoff, p, tol=1e-6))]
fn truncation_error(c: Vec<Complex64>, cutoff: usize, p: f64, tol: f64) -> PyResult<f64> {
    hermspace::operators::truncation_error(&coeffs(c)?, cutoff, p, &spec(tol)?).map_err(to_py)
}

/// Weighted coefficient norm sum |c_n| (1+n)^gamma.
#[pyfunction]
fn c_gamma(c: Vec<Complex64>, gamma: f64) -> PyResult<f64> {
    hermspace::operators::c_gamma_norm(&coeffs(c)?, gamma).map_err(to_py)
}

/// Lebesgue constant of the degree-n Fourier cutoff on the circle.
#[pyfunction]
#[pyo3(signature = (n, tol=1e-6))]
fn dirichlet_l1(n: usize, tol: f64) -> PyResult<f64> {
    hermspace::operators::dirichlet_l1(n, &spec(tol)?).map_err(to_py)
}

/// Zak transform of h_n at (x, omega) in the unit square.
#[pyfunction]
#[pyo3(signature = (n, x, omega, tail_tol=1e-10))]
fn zak(n: usize, x: f64, omega: f64, tail_tol: f64) -> PyResult<Complex64> {
    hermspace::zak_gabor::zak_hermite(n, x, omega, tail_tol).map_err(to_py)
}

/// Grid sup of |Z h_n| and its ratio to (n+1)^{1/4}.
#[pyfunction]
#[pyo3(signature = (n, grid=256))]
fn zak_sup(n: usize, grid: usize) -> PyResult<(f64, f64)> {
    hermspace::zak_gabor::zak_sup(n, grid).map_err(to_py)
}

fn lattice_by_name(name: &str) -> PyResult<(Lattice2D, RelMode)> {
    match name {
        "square" => Ok((Lattice2D::integer(), RelMode::ExactRectangular)),
        "half" => Ok((
            Lattice2D::rectangular(0.5, 1.0).map_err(to_py)?,
            RelMode::ExactRectangular,
        )),
        "hex" => Ok((Lattice2D::hexagonal(), RelMode::SlidingEstimate)),
        other => Err(PyValueError::new_err(format!(
            "unknown lattice {other:?}, expected square, half, or hex"
        ))),
    }
}

/// Gabor Bessel sum of order n over a named lattice for a probe at
/// (x, omega); the enumeration radius is chosen from the probe and order.
#[pyfunction]
#[pyo3(signature = (lattice, n, x=0.0, omega=0.0))]
fn bessel_sum(lattice: &str, n: usize, x: f64, omega: f64) -> PyResult<f64> {
    let (lat, _) = lattice_by_name(lattice)?;
    let w = point(x, omega)?;
    let radius = w.abs() + 5.0 + ((n as f64 + 1.0) / PI).sqrt() + 0.5;
    hermspace::zak_gabor::bessel_sum(n, &lat, &w, radius).map_err(to_py)
}

/// Maximal number of lattice points in a translated unit square.
#[pyfunction]
fn rel_lattice(lattice: &str) -> PyResult<usize> {
    let (lat, mode) = lattice_by_name(lattice)?;
    hermspace::zak_gabor::rel_lattice(&lat, mode).map_err(to_py)
}

#[pymodule]
fn pyhermspace(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBoundReport>()?;
    m.add_function(wrap_pyfunction!(hermite_values, m)?)?;
    m.add_function(wrap_pyfunction!(decay_radius, m)?)?;
    m.add_function(wrap_pyfunction!(poisson_weights, m)?)?;
    m.add_function(wrap_pyfunction!(l1_norm, m)?)?;
    m.add_function(wrap_pyfunction!(check_sandwich, m)?)?;
    m.add_function(wrap_pyfunction!(stft_gaussian, m)?)?;
    m.add_function(wrap_pyfunction!(mp_norm, m)?)?;
    m.add_function(wrap_pyfunction!(mp_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(m1_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(m1_asymptote, m)?)?;
    m.add_function(wrap_pyfunction!(sn_probe, m)?)?;
    m.add_function(wrap_pyfunction!(sn_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(truncation_error, m)?)?;
    m.add_function(wrap_pyfunction!(c_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(dirichlet_l1, m)?)?;
    m.add_function(wrap_pyfunction!(zak, m)?)?;
    m.add_function(wrap_pyfunction!(zak_sup, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_sum, m)?)?;
    m.add_function(wrap_pyfunction!(rel_lattice, m)?)?;
    Ok(())
}
