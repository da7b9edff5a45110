//! Closed-form results of the deformed theory: weight functions, the
//! discrete position spectrum, oscillator energies and eigenfunctions, and
//! the residual self-checks that tie them back to their differential
//! equations.

pub mod hermiticity;
pub mod oscillator1d;
pub mod oscillator3d;
pub mod position;
pub mod time_op;
pub mod weight;

use crate::specfun::SpecFunError;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticError {
    /// ℓ = 0 was passed where only the deformed theory makes sense; the
    /// caller should use the undeformed closed forms instead.
    UndeformedLimit(&'static str),
    /// The weight base `1 − δ²g_μν p_μ p_ν` was non-positive.
    WeightDomain {
        base: f64,
    },
    SpecFun(SpecFunError),
}

impl fmt::Display for AnalyticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticError::UndeformedLimit(msg) => write!(f, "undeformed limit: {msg}"),
            AnalyticError::WeightDomain { base } => {
                write!(f, "weight base must be positive, got {base}")
            }
            AnalyticError::SpecFun(e) => write!(f, "special function error: {e}"),
        }
    }
}

impl std::error::Error for AnalyticError {}

pub use hermiticity::{
    apply_position_operator, hermiticity_defect, hermiticity_defect_sweep, GaussianEnvelope,
    SampleGrid1D, WeightMode,
};
pub use oscillator1d::{
    eigenfunction_1d, energy_1d, energy_1d_coefficients, gegenbauer_ode_residual, sigma_roots,
    weighted_mode_overlap, OscillatorMode1D, SigmaRoots,
};
pub use oscillator3d::{
    energy_3d, energy_3d_coefficients, gamma_root, jacobi_ode_residual, radial_eigenfunction_3d,
    radial_norm, radial_overlap, RadialMode3D,
};
pub use position::{laguerre_background_residual, minimum_length, position_eigenvalue};
pub use time_op::{time_eigenfunction, time_residual};
pub use weight::WeightSpec;
