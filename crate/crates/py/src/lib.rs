//! Python bindings: the main parameter type, the closed-form spectra, the
//! numeric pipeline, and the exact algebra verifier.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use dynquant::algebra::{run_commutator_table, ExactParams};
use dynquant::analytic;
use dynquant::numeric::{self, Discretization1D};
use dynquant::params::{DeformationParams, SpaceTimeSignature};
use dynquant::specfun;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn runtime_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

/// Physical constants and derived deformation scales.
#[pyclass(name = "Params", skip_from_py_object)]
#[derive(Clone)]
struct PyParams {
    inner: DeformationParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (hbar=1.0, mass=1.0, omega=1.0, ell=0.0, c=1.0, kappa=0.0))]
    fn new(hbar: f64, mass: f64, omega: f64, ell: f64, c: f64, kappa: f64) -> PyResult<Self> {
        DeformationParams::new(hbar, mass, omega, ell, c, kappa)
            .map(|inner| PyParams { inner })
            .map_err(value_err)
    }

    /// Natural units with ℓ chosen so that ε = ωℓ/2c takes `eps`.
    #[staticmethod]
    fn with_eps(eps: f64) -> PyResult<Self> {
        DeformationParams::with_eps(eps)
            .map(|inner| PyParams { inner })
            .map_err(value_err)
    }

    /// Copy with the gauge parameter κ replaced.
    fn with_kappa(&self, kappa: f64) -> PyResult<Self> {
        self.inner
            .with_kappa(kappa)
            .map(|inner| PyParams { inner })
            .map_err(value_err)
    }

    #[getter]
    fn delta_sq(&self) -> f64 {
        self.inner.delta_sq()
    }

    #[getter]
    fn delta(&self) -> f64 {
        self.inner.delta()
    }

    #[getter]
    fn eps(&self) -> f64 {
        self.inner.eps()
    }

    #[getter]
    fn kappa(&self) -> f64 {
        self.inner.kappa()
    }

    /// Lower bound |ħ/2 + ℓE/2c| on Δp·Δq at energy `energy`.
    fn uncertainty_bound(&self, energy: f64) -> f64 {
        self.inner.uncertainty_bound(energy)
    }

    fn __repr__(&self) -> String {
        format!(
            "Params(hbar={}, mass={}, omega={}, ell={}, c={}, kappa={})",
            self.inner.hbar(),
            self.inner.mass(),
            self.inner.omega(),
            self.inner.ell(),
            self.inner.c(),
            self.inner.kappa()
        )
    }
}

/// 1D oscillator energy E_n = ħω[(n+½)√(1+ε²) + (n²+n+½)ε].
#[pyfunction]
fn energy_1d(n: u32, params: &PyParams) -> f64 {
    analytic::energy_1d(n, &params.inner)
}

/// 3D isotropic oscillator energy for angular number s and radial m′.
#[pyfunction]
fn energy_3d(s: u32, m_prime: u32, params: &PyParams) -> f64 {
    analytic::energy_3d(s, m_prime, &params.inner)
}

/// Position eigenvalue λ_n = 2nħδ (n may be negative).
#[pyfunction]
fn position_eigenvalue(n: i64, params: &PyParams) -> f64 {
    analytic::position_eigenvalue(n, &params.inner)
}

/// Minimum measurable length interval 2ħδ.
#[pyfunction]
fn minimum_length(params: &PyParams) -> f64 {
    analytic::minimum_length(&params.inner)
}

/// Normalized 1D oscillator eigenfunction Ψ_n(p).
#[pyfunction]
fn eigenfunction_1d(n: u32, p: f64, params: &PyParams) -> PyResult<f64> {
    let mode = analytic::OscillatorMode1D::new(n, &params.inner).map_err(value_err)?;
    analytic::eigenfunction_1d(&mode, p, &params.inner).map_err(value_err)
}

/// Normalized radial eigenfunction Π_{s,m′}(p) of the 3D oscillator.
#[pyfunction]
fn radial_eigenfunction_3d(s: u32, m_prime: u32, p: f64, params: &PyParams) -> PyResult<f64> {
    let mode = analytic::RadialMode3D::new(s, m_prime, &params.inner).map_err(value_err)?;
    analytic::radial_eigenfunction_3d(&mode, p, &params.inner).map_err(value_err)
}

/// Weight W(p) of the weighted inner product for a `dim`-component vector.
#[pyfunction]
fn weight(p: Vec<f64>, params: &PyParams) -> PyResult<f64> {
    let sig = SpaceTimeSignature::new(p.len()).map_err(value_err)?;
    analytic::WeightSpec::new(params.inner, sig)
        .weight(&p)
        .map_err(value_err)
}

#[pyfunction]
fn gegenbauer(n: i64, a: f64, x: f64) -> PyResult<f64> {
    specfun::gegenbauer(n, a, x).map_err(value_err)
}

#[pyfunction]
fn jacobi(n: i64, a: f64, b: f64, x: f64) -> PyResult<f64> {
    specfun::jacobi(n, a, b, x).map_err(value_err)
}

#[pyfunction]
fn assoc_laguerre(n: i64, k: i64, x: f64) -> PyResult<f64> {
    specfun::assoc_laguerre(n, k, x).map_err(value_err)
}

#[pyfunction]
fn log_gamma(x: f64) -> PyResult<f64> {
    specfun::log_gamma(x).map_err(value_err)
}

/// Run the exact commutator-table verification at the given degree over
/// δ² ∈ {0, 1, 1/3} and κ ∈ {0, δ², 5δ²/2}; returns
/// `(identities_checked, failed_names)`.
#[pyfunction]
#[pyo3(signature = (max_degree=6))]
fn verify_commutator_algebra(max_degree: u32) -> (usize, Vec<String>) {
    let mut checked = 0usize;
    let mut failed = Vec::new();
    for dsq in [(0i64, 1i64), (1, 1), (1, 3)] {
        for kappa_multiple in [(0i64, 1i64), (1, 1), (5, 2)] {
            let kappa = (dsq.0 * kappa_multiple.0, dsq.1 * kappa_multiple.1);
            let params = ExactParams::unit_hbar(dsq, kappa);
            for (name, report) in run_commutator_table(&params, max_degree) {
                checked += 1;
                if !report.holds() {
                    failed.push(name);
                }
            }
        }
    }
    (checked, failed)
}

/// Deduplicated eigenvalues of the discretized position operator.
#[pyfunction]
fn position_lattice(params: &PyParams, n_g: usize) -> PyResult<Vec<f64>> {
    numeric::position_lattice(&params.inner, n_g).map_err(runtime_err)
}

/// Richardson-extrapolated 1D oscillator eigenvalues from the numeric
/// pipeline (independent of the closed forms).
#[pyfunction]
fn spectrum_1d(params: &PyParams, n_levels: usize, grids: Vec<usize>) -> PyResult<Vec<f64>> {
    numeric::spectrum_1d(&params.inner, n_levels, &grids, Discretization1D::Auto)
        .map(|r| r.extrapolated)
        .map_err(runtime_err)
}

/// Richardson-extrapolated radial eigenvalues at angular number `s`.
#[pyfunction]
fn spectrum_radial(
    params: &PyParams,
    s: u32,
    m_levels: usize,
    grids: Vec<usize>,
) -> PyResult<Vec<f64>> {
    numeric::spectrum_radial(&params.inner, s, m_levels, &grids, None)
        .map(|r| r.extrapolated)
        .map_err(runtime_err)
}

#[pymodule]
fn dynquant_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyParams>()?;
    m.add_function(wrap_pyfunction!(energy_1d, m)?)?;
    m.add_function(wrap_pyfunction!(energy_3d, m)?)?;
    m.add_function(wrap_pyfunction!(position_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(minimum_length, m)?)?;
    m.add_function(wrap_pyfunction!(eigenfunction_1d, m)?)?;
    m.add_function(wrap_pyfunction!(radial_eigenfunction_3d, m)?)?;
    m.add_function(wrap_pyfunction!(weight, m)?)?;
    m.add_function(wrap_pyfunction!(gegenbauer, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi, m)?)?;
    m.add_function(wrap_pyfunction!(assoc_laguerre, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(verify_commutator_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(position_lattice, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_1d, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_radial, m)?)?;
    Ok(())
}
