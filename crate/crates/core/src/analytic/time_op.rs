//! Eigenfunctions of the temporal position operator.
//!
//! `q_0 ψ = λψ` is solved by
//! `ψ = A exp[(iλ/ħδ)·artanh(δp_0)] / (1 − δ²g_μν p_μ p_ν)^{κ/2δ²}`
//! for every real λ: the time spectrum is continuous, in contrast to the
//! discrete spatial lattice. The residual check applies `q_0` by central
//! finite differences in all four momentum variables.

use super::AnalyticError;
use crate::params::DeformationParams;
use num_complex::Complex64;

/// `artanh` on (−1, 1) through the single well-conditioned branch
/// `½ ln((1+x)/(1−x))`.
fn artanh(x: f64) -> Result<f64, AnalyticError> {
    if x.abs() >= 1.0 {
        return Err(AnalyticError::WeightDomain { base: 1.0 - x * x });
    }
    Ok(0.5 * ((1.0 + x) / (1.0 - x)).ln())
}

/// Evaluate the time eigenfunction at a four-momentum (unit amplitude).
///
/// Domain: `|δp_0| < 1` and a positive weight base.
pub fn time_eigenfunction(
    lambda: f64,
    p: [f64; 4],
    params: &DeformationParams,
) -> Result<Complex64, AnalyticError> {
    let dsq = params.delta_sq();
    let delta = params.delta();
    let hbar = params.hbar();
    if dsq == 0.0 {
        if params.kappa() != 0.0 {
            return Err(AnalyticError::UndeformedLimit(
                "κ ≠ 0 needs δ² > 0 for the weight exponent κ/2δ²",
            ));
        }
        // plane wave in p_0
        return Ok(Complex64::from_polar(1.0, lambda * p[0] / hbar));
    }
    let phase = lambda / (hbar * delta) * artanh(delta * p[0])?;
    let spatial_sq: f64 = p[1] * p[1] + p[2] * p[2] + p[3] * p[3];
    let base = 1.0 - dsq * (p[0] * p[0] - spatial_sq);
    if base <= 0.0 {
        return Err(AnalyticError::WeightDomain { base });
    }
    let amplitude = base.powf(-0.5 * params.kappa() / dsq);
    Ok(Complex64::from_polar(amplitude, phase))
}

/// Max relative residual `|q_0ψ − λψ| / max|λψ|` over a sample cloud, with
/// `q_0 = -iħ[∂_0 − δ²p_0(p_ν ∂_ν)] + iħκp_0` applied by sixth-order
/// central differences.
pub fn time_residual(
    lambda: f64,
    params: &DeformationParams,
    samples: &[[f64; 4]],
) -> Result<f64, AnalyticError> {
    let dsq = params.delta_sq();
    let delta = params.delta();
    let hbar = params.hbar();
    let kappa = params.kappa();
    let i = Complex64::new(0.0, 1.0);

    let mut max_res: f64 = 0.0;
    let mut max_ref: f64 = 0.0;
    for &p in samples {
        // keep the whole stencil inside |δp_0| < 1
        let h0_limit = if delta > 0.0 {
            (1.0 / delta - p[0].abs()) / 4.0
        } else {
            f64::INFINITY
        };
        let h = 1e-2f64.min(h0_limit).max(1e-6);

        let psi = time_eigenfunction(lambda, p, params)?;
        let mut grad = [Complex64::new(0.0, 0.0); 4];
        for (axis, g) in grad.iter_mut().enumerate() {
            let eval = |offset: f64| -> Result<Complex64, AnalyticError> {
                let mut q = p;
                q[axis] += offset;
                time_eigenfunction(lambda, q, params)
            };
            *g = (45.0 * (eval(h)? - eval(-h)?) - 9.0 * (eval(2.0 * h)? - eval(-2.0 * h)?)
                + (eval(3.0 * h)? - eval(-3.0 * h)?))
                / (60.0 * h);
        }
        let euler: Complex64 = (0..4).map(|nu| p[nu] * grad[nu]).sum();
        let q0_psi = -i * hbar * (grad[0] - dsq * p[0] * euler) + i * hbar * kappa * p[0] * psi;
        let res = (q0_psi - lambda * psi).norm();
        max_res = max_res.max(res);
        max_ref = max_ref.max((lambda * psi).norm());
    }
    Ok(max_res / max_ref.max(f64::MIN_POSITIVE))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cloud() -> Vec<[f64; 4]> {
        let mut out = Vec::new();
        for i in -3i32..=3 {
            for j in 0..=2 {
                out.push([
                    0.45 * i as f64,
                    0.3 * j as f64,
                    -0.2 * j as f64 + 0.1,
                    0.25 * i as f64,
                ]);
            }
        }
        out
    }

    #[test]
    fn zero_eigenvalue_zero_kappa_is_constant() {
        let params = DeformationParams::natural().with_ell(0.25).unwrap();
        for p in cloud() {
            let v = time_eigenfunction(0.0, p, &params).unwrap();
            assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }
        let res = time_residual(0.0, &params, &cloud()).unwrap();
        assert_eq!(res, 0.0);
    }

    #[test]
    fn residual_small_on_sample_cloud() {
        // δ = 0.5: |p_0| < 2 on the cloud
        let params = DeformationParams::natural().with_ell(0.25).unwrap();
        let res = time_residual(1.3, &params, &cloud()).unwrap();
        assert!(res < 1e-6, "residual {res}");
    }

    #[test]
    fn residual_small_with_kappa() {
        let params = DeformationParams::natural()
            .with_ell(0.25)
            .unwrap()
            .with_kappa(0.3)
            .unwrap();
        let res = time_residual(0.8, &params, &cloud()).unwrap();
        assert!(res < 1e-6, "residual {res}");
    }

    #[test]
    fn bounded_amplitude_with_winding_phase_near_edge() {
        // κ = 0: |ψ| = 1 while the phase grows monotonically as δp_0 → 1
        let params = DeformationParams::natural().with_ell(0.25).unwrap();
        let lambda = 1.0;
        let mut prev_phase = f64::NEG_INFINITY;
        for k in 1..=12 {
            let p0 = 2.0 * (1.0 - 2f64.powi(-k)); // approaches 1/δ = 2
            let v = time_eigenfunction(lambda, [p0, 0.0, 0.0, 0.0], &params).unwrap();
            assert!((v.norm() - 1.0).abs() < 1e-12);
            let phase = lambda / (1.0 * 0.5) * 0.5 * ((1.0 + 0.5 * p0) / (1.0 - 0.5 * p0)).ln();
            assert!(phase > prev_phase);
            prev_phase = phase;
        }
        // out of domain
        assert!(time_eigenfunction(1.0, [2.0, 0.0, 0.0, 0.0], &params).is_err());
    }

    #[test]
    fn undeformed_limit_is_plane_wave() {
        let params = DeformationParams::natural();
        let v = time_eigenfunction(2.0, [0.7, 0.0, 0.0, 0.0], &params).unwrap();
        assert!((v - Complex64::from_polar(1.0, 1.4)).norm() < 1e-14);
        let bad = DeformationParams::natural().with_kappa(0.1).unwrap();
        assert!(time_eigenfunction(1.0, [0.0; 4], &bad).is_err());
    }
}
