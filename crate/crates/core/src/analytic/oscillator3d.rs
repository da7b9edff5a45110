//! Three-dimensional isotropic deformed oscillator: radial modes, spectrum,
//! and normalized radial eigenfunctions.
//!
//! Separating off a spherical harmonic with angular quantum number `s`
//! leaves a radial problem solved by Jacobi polynomials of degree m′ in the
//! compact variable `η = (δ²p²−1)/(δ²p²+1)`; the principal quantum number is
//! `n = s + 2m′` and
//!
//! `E = ħω(n+3/2)√(1+ε²) + ħω(n²+3n−s(s+1)+3/2)ε`.
//!
//! The `s(s+1)` term splits the undeformed shell degeneracy for any ε > 0.

use super::AnalyticError;
use crate::params::DeformationParams;
use crate::specfun::{jacobi, log_gamma};
use num_rational::Rational64;

/// Envelope exponent `γ = -¼ - s/2 - κ/(2δ²) - ¼√(1+(2c/ωℓ)²)`: the root
/// that reproduces the undeformed limit.
pub fn gamma_root(s: u32, params: &DeformationParams) -> Result<f64, AnalyticError> {
    let dsq = params.delta_sq();
    let eps = params.eps();
    if dsq == 0.0 || eps == 0.0 {
        return Err(AnalyticError::UndeformedLimit(
            "the envelope exponent exists only for ℓ > 0",
        ));
    }
    let root = (1.0 + 1.0 / (eps * eps)).sqrt();
    Ok(-0.25 - 0.5 * s as f64 - 0.5 * params.kappa() / dsq - 0.25 * root)
}

/// One radial mode `(s, m′)` of the isotropic oscillator.
#[derive(Debug, Clone, Copy)]
pub struct RadialMode3D {
    /// Angular quantum number.
    pub s: u32,
    /// Radial (Jacobi) quantum number.
    pub m_prime: u32,
    /// Principal quantum number `n = s + 2m′`.
    pub n: u32,
    pub gamma: f64,
    /// Jacobi index `a = ½√(1+(2c/ωℓ)²)`.
    pub a: f64,
    /// Jacobi index `b = s + ½`.
    pub b: f64,
}

impl RadialMode3D {
    pub fn new(s: u32, m_prime: u32, params: &DeformationParams) -> Result<Self, AnalyticError> {
        let gamma = gamma_root(s, params)?;
        let eps = params.eps();
        let a = 0.5 * (1.0 + 1.0 / (eps * eps)).sqrt();
        Ok(RadialMode3D {
            s,
            m_prime,
            n: s + 2 * m_prime,
            gamma,
            a,
            b: s as f64 + 0.5,
        })
    }

    /// The compact Jacobi argument `η(p) = (δ²p²−1)/(δ²p²+1)`; maps
    /// `p = 1/δ` to 0 and `(0, ∞)` onto `(−1, 1)`.
    pub fn jacobi_argument(p: f64, params: &DeformationParams) -> f64 {
        let u = params.delta_sq() * p * p;
        (u - 1.0) / (u + 1.0)
    }
}

/// `E = ħω(n+3/2)√(1+ε²) + ħω(n²+3n−s(s+1)+3/2)ε` with `n = s + 2m′`.
pub fn energy_3d(s: u32, m_prime: u32, params: &DeformationParams) -> f64 {
    let eps = params.eps();
    let (c_sqrt, c_eps) = energy_3d_coefficients(s, m_prime);
    params.hbar()
        * params.omega()
        * (ratio_to_f64(c_sqrt) * (1.0 + eps * eps).sqrt() + ratio_to_f64(c_eps) * eps)
}

/// Exact coefficients `(n+3/2, n²+3n−s(s+1)+3/2)` of `√(1+ε²)` and `ε`.
pub fn energy_3d_coefficients(s: u32, m_prime: u32) -> (Rational64, Rational64) {
    let s = s as i64;
    let n = s + 2 * m_prime as i64;
    (
        Rational64::new(2 * n + 3, 2),
        Rational64::new(2 * (n * n + 3 * n - s * (s + 1)) + 3, 2),
    )
}

fn ratio_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Normalized radial function
///
/// `Π(p) = √(2(2m′+a+b+1) m′! Γ(m′+a+b+1)/(Γ(m′+a+1)Γ(m′+b+1))) δ^{3/2}
///         (δp)^s (1+δ²p²)^γ P_{m′}^{(a,b)}(η(p))`,
///
/// normalized so `∫₀^∞ |Π|² p² dp / W = 1`. Log-domain evaluation for the
/// same reason as in one dimension.
pub fn radial_eigenfunction_3d(
    mode: &RadialMode3D,
    p: f64,
    params: &DeformationParams,
) -> Result<f64, AnalyticError> {
    if p < 0.0 {
        return Err(AnalyticError::WeightDomain { base: p });
    }
    let delta = params.delta();
    if delta == 0.0 {
        return Err(AnalyticError::UndeformedLimit(
            "radial_eigenfunction_3d requires ℓ > 0",
        ));
    }
    let (s, m, a, b) = (mode.s, mode.m_prime, mode.a, mode.b);
    if p == 0.0 && s > 0 {
        return Ok(0.0);
    }
    let eta = RadialMode3D::jacobi_argument(p, params);
    let jac = jacobi(m as i64, a, b, eta).map_err(AnalyticError::SpecFun)?;
    if jac == 0.0 {
        return Ok(0.0);
    }
    let ln_norm_sq = std::f64::consts::LN_2
        + (2.0 * m as f64 + a + b + 1.0).ln()
        + log_gamma(m as f64 + 1.0).map_err(AnalyticError::SpecFun)?
        + log_gamma(m as f64 + a + b + 1.0).map_err(AnalyticError::SpecFun)?
        - log_gamma(m as f64 + a + 1.0).map_err(AnalyticError::SpecFun)?
        - log_gamma(m as f64 + b + 1.0).map_err(AnalyticError::SpecFun)?
        + 3.0 * delta.ln();
    let u = delta * p;
    let mut ln_val = 0.5 * ln_norm_sq + mode.gamma * (1.0 + u * u).ln() + jac.abs().ln();
    if s > 0 {
        ln_val += s as f64 * u.ln();
    }
    Ok(jac.signum() * ln_val.exp())
}

/// `∫₀^∞ Π_a Π_b p² dp / W` by quadrature for two modes of the same
/// angular channel: δ_{m′_a m′_b} for normalized modes.
///
/// Integrates on `η = −cos φ` so the endpoint powers are smooth for
/// Gauss–Legendre.
pub fn radial_overlap(
    mode_a: &RadialMode3D,
    mode_b: &RadialMode3D,
    params: &DeformationParams,
    order: usize,
) -> Result<f64, AnalyticError> {
    assert_eq!(
        mode_a.s, mode_b.s,
        "modes of different angular channels are orthogonal through the \
         spherical harmonics, not the radial integral"
    );
    let delta = params.delta();
    let spec =
        super::weight::WeightSpec::new(*params, crate::params::SpaceTimeSignature::new(3).unwrap());
    let rule = crate::specfun::gauss_legendre(order).map_err(AnalyticError::SpecFun)?;
    let val = rule.integrate_on(0.0, std::f64::consts::PI, |phi| {
        let eta = -phi.cos();
        let one_minus = 1.0 - eta;
        let one_plus = 1.0 + eta;
        if one_minus <= 0.0 || one_plus <= 0.0 {
            return 0.0;
        }
        let p = (one_plus / one_minus).sqrt() / delta;
        let pi_a = radial_eigenfunction_3d(mode_a, p, params).unwrap();
        let pi_b = radial_eigenfunction_3d(mode_b, p, params).unwrap();
        let inv_w = 1.0 / spec.weight(&[0.0, 0.0, p]).unwrap();
        // dp = dη/(δ (1+η)^{1/2} (1−η)^{3/2}), dη = sinφ dφ
        let jac = phi.sin() / (delta * one_plus.sqrt() * one_minus.powf(1.5));
        pi_a * pi_b * p * p * inv_w * jac
    });
    Ok(val)
}

/// `∫₀^∞ |Π|² p² dp / W`: one for a normalized mode.
pub fn radial_norm(
    mode: &RadialMode3D,
    params: &DeformationParams,
    order: usize,
) -> Result<f64, AnalyticError> {
    radial_overlap(mode, mode, params, order)
}

/// Maximum normalized residual of the radial equation in the compact
/// variable, with the eigenvalue coefficient computed from [`energy_3d`]:
///
/// `(1−η²)Ξ'' + [b−a−(a+b+2)η]Ξ' + λΞ`,
/// `λ = E/(4εħω) − 3/8 − s/2 − (3/8+s/4)√(1+1/ε²)`,
///
/// with `Ξ = P_{m′}^{(a,b)}` by recurrence and sixth-order central
/// differences for the derivatives.
pub fn jacobi_ode_residual(
    mode: &RadialMode3D,
    params: &DeformationParams,
    eta_samples: &[f64],
) -> Result<f64, AnalyticError> {
    let eps = params.eps();
    if eps == 0.0 {
        return Err(AnalyticError::UndeformedLimit(
            "the compact-variable ODE exists only for ℓ > 0",
        ));
    }
    let (s, m, a, b) = (mode.s, mode.m_prime, mode.a, mode.b);
    let root = (1.0 + 1.0 / (eps * eps)).sqrt();
    let e_over = energy_3d(s, m, params) / (params.hbar() * params.omega());
    let lam = e_over / (4.0 * eps) - 0.375 - 0.5 * s as f64 - (0.375 + 0.25 * s as f64) * root;

    let f = |x: f64| jacobi(m as i64, a, b, x).unwrap();
    let h = 5e-4;
    let mut max_res: f64 = 0.0;
    let mut max_val: f64 = 0.0;
    for &eta in eta_samples {
        assert!(eta.abs() + 3.0 * h < 1.0, "sample too close to ±1");
        let d1 = (45.0 * (f(eta + h) - f(eta - h)) - 9.0 * (f(eta + 2.0 * h) - f(eta - 2.0 * h))
            + (f(eta + 3.0 * h) - f(eta - 3.0 * h)))
            / (60.0 * h);
        let d2 = (-490.0 * f(eta) + 270.0 * (f(eta + h) + f(eta - h))
            - 27.0 * (f(eta + 2.0 * h) + f(eta - 2.0 * h))
            + 2.0 * (f(eta + 3.0 * h) + f(eta - 3.0 * h)))
            / (180.0 * h * h);
        let res = (1.0 - eta * eta) * d2 + (b - a - (a + b + 2.0) * eta) * d1 + lam * f(eta);
        max_res = max_res.max(res.abs());
        max_val = max_val.max(f(eta).abs());
    }
    Ok(max_res / max_val.max(f64::MIN_POSITIVE))
}
