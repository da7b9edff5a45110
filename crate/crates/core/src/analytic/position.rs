//! The discrete position spectrum and its background-space check.
//!
//! The deformed position operator has eigenvalues `λ_n = 2nħδ` for all
//! integers n: physical space is a lattice with minimum interval `2ħδ`,
//! independent of the gauge parameter κ. In the background representation
//! the eigenproblem reduces to the associated Laguerre equation
//! `η φ'' + (2 − η) φ' + (n − 1) φ = 0` with `φ = L¹_{n−1}(η)`, which is
//! verified here in exact rational arithmetic.

use crate::algebra::poly::{coeff_real, Poly};
use crate::params::DeformationParams;

/// `λ_n = 2nħδ`; `n` ranges over all integers (0, ±1, ±2, …).
pub fn position_eigenvalue(n: i64, params: &DeformationParams) -> f64 {
    2.0 * n as f64 * params.hbar() * params.delta()
}

/// Lattice spacing `Δq_min = 2ħδ`, the minimum measurable length interval.
pub fn minimum_length(params: &DeformationParams) -> f64 {
    2.0 * params.hbar() * params.delta()
}

/// `L_n^k(η)` as an exact rational polynomial in the first variable slot:
/// `Σ_m (-1)^m C(n+k, n-m) η^m / m!`.
fn laguerre_poly_exact(n: u32, k: u32) -> Poly {
    let mut poly = Poly::zero();
    for m in 0..=n {
        // C(n+k, n-m) with integer arguments
        let mut binom = 1i64;
        for j in 0..(n - m) {
            binom = binom * (n + k - j) as i64 / (j + 1) as i64;
        }
        let mut fact = 1i64;
        for j in 1..=m {
            fact *= j as i64;
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        poly = &poly + &Poly::monomial([m, 0, 0, 0], coeff_real(sign * binom, fact));
    }
    poly
}

/// Residual of the background-space position eigenproblem for eigenvalue
/// `λ_n = 2nħδ` (n ≥ 1), evaluated in exact rational arithmetic:
///
/// `η φ'' + (2 − η) φ' + (λ/(2ħδ) − 1) φ` with `φ = L¹_{n−1}`.
///
/// Returns the residual polynomial; the identity holds iff it is zero, in
/// which case the numeric residual reported by callers is exactly 0.
pub fn laguerre_background_residual(n: u32) -> Poly {
    assert!(n >= 1, "the background reduction indexes modes from n = 1");
    let phi = laguerre_poly_exact(n - 1, 1);
    let eta = Poly::var(0);
    let d1 = phi.derivative(0);
    let d2 = d1.derivative(0);
    let two_minus_eta = &Poly::constant(coeff_real(2, 1)) - &eta;
    // λ/(2ħδ) − 1 = n − 1 exactly
    let lam = Poly::constant(coeff_real(n as i64 - 1, 1));
    &(&(&eta * &d2) + &(&two_minus_eta * &d1)) + &(&lam * &phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvalue_examples() {
        let params = DeformationParams::natural();
        assert_eq!(position_eigenvalue(0, &params), 0.0);
        // ħ = 1, δ = 0.5 (δ² = 0.25), n = 3 → 3.0
        let params = DeformationParams::natural().with_ell(0.25).unwrap();
        assert!((position_eigenvalue(3, &params) - 3.0).abs() < 1e-14);
        assert!((position_eigenvalue(-2, &params) + 2.0).abs() < 1e-14);
    }

    #[test]
    fn lattice_spacing_is_minimum_length() {
        let params = DeformationParams::natural().with_ell(0.37).unwrap();
        let spacing = minimum_length(&params);
        for n in -5i64..5 {
            let gap = position_eigenvalue(n + 1, &params) - position_eigenvalue(n, &params);
            assert!((gap - spacing).abs() < 1e-14);
        }
        assert!((spacing - (2.0 * 0.37f64.sqrt())).abs() < 1e-15);
    }

    #[test]
    fn laguerre_background_identity_is_exact() {
        for n in 1..=8u32 {
            let residual = laguerre_background_residual(n);
            assert!(
                residual.is_zero(),
                "residual nonzero for n = {n}: {residual}"
            );
        }
    }

    #[test]
    fn laguerre_poly_matches_recurrence() {
        use crate::specfun::assoc_laguerre;
        use num_traits::ToPrimitive;
        // evaluate the exact polynomial at a few rational points
        for n in 0..=6u32 {
            for x10 in [-7i64, 0, 3, 12] {
                let x = x10 as f64 / 10.0;
                let exact = laguerre_poly_exact(n, 1)
                    .terms()
                    .map(|(e, c)| c.re.to_f64().unwrap() * x.powi(e[0] as i32))
                    .sum::<f64>();
                let rec = assoc_laguerre(n as i64, 1, x).unwrap();
                assert!((exact - rec).abs() < 1e-12 * rec.abs().max(1.0));
            }
        }
    }
}
