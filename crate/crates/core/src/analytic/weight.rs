//! The weight function that makes the deformed position operators symmetric.
//!
//! The weighted inner product is `(ψ,φ) = ∫ dτ ψ*φ / W(p·p)` with
//! `W = (1 − δ² g_μν p_μ p_ν)^{1−β}` and `β = κ/δ² − (N−1)/2`. The
//! integration constant is one, so `W(0) = 1` always.

use super::AnalyticError;
use crate::params::{DeformationParams, SpaceTimeSignature};
use num_complex::Complex64;

/// Weight specification for a given parameter set and signature.
#[derive(Debug, Clone, Copy)]
pub struct WeightSpec {
    pub params: DeformationParams,
    pub sig: SpaceTimeSignature,
    /// `κ/δ² − (N−1)/2`; zero in the undeformed limit where the weight is
    /// identically one.
    pub beta: f64,
}

impl WeightSpec {
    pub fn new(params: DeformationParams, sig: SpaceTimeSignature) -> Self {
        let dsq = params.delta_sq();
        let beta = if dsq > 0.0 {
            params.kappa() / dsq - 0.5 * (sig.dim() as f64 - 1.0)
        } else {
            0.0
        };
        WeightSpec { params, sig, beta }
    }

    /// `1 − δ² g_μν p_μ p_ν`; must stay positive for the weight to exist.
    /// Purely spatial vectors always qualify; along the time axis this
    /// requires `|δ p_0| < 1`.
    pub fn base(&self, p: &[f64]) -> f64 {
        1.0 - self.params.delta_sq() * self.sig.minkowski_sq(p)
    }

    /// `W(p) = base^{1−β}`.
    pub fn weight(&self, p: &[f64]) -> Result<f64, AnalyticError> {
        let base = self.base(p);
        if base <= 0.0 {
            return Err(AnalyticError::WeightDomain { base });
        }
        Ok(base.powf(1.0 - self.beta))
    }

    /// Probability density `|ψ(p)|² / W(p)`.
    pub fn probability_density(
        &self,
        psi_value: Complex64,
        p: &[f64],
    ) -> Result<f64, AnalyticError> {
        Ok(psi_value.norm_sqr() / self.weight(p)?)
    }
}
