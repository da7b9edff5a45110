//! Construction of the deformed position operators, the Lorentz generators
//! they close into, and their background-space counterparts, all with exact
//! rational parameters.

use super::operator::DiffOperator;
use super::poly::{coeff_i, coeff_real, rat, Coeff, Poly};
use crate::params::{ParamsError, SpaceTimeSignature};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;

/// Exact-rational counterpart of the float parameter set; only the three
/// constants that enter the operators are needed.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactParams {
    pub hbar: BigRational,
    pub delta_sq: BigRational,
    pub kappa: BigRational,
}

impl ExactParams {
    pub fn new(hbar: BigRational, delta_sq: BigRational, kappa: BigRational) -> Self {
        ExactParams {
            hbar,
            delta_sq,
            kappa,
        }
    }

    /// `ħ = 1` with `δ²` and `κ` given as integer fractions.
    pub fn unit_hbar(delta_sq: (i64, i64), kappa: (i64, i64)) -> Self {
        ExactParams {
            hbar: rat(1, 1),
            delta_sq: rat(delta_sq.0, delta_sq.1),
            kappa: rat(kappa.0, kappa.1),
        }
    }

    fn i_hbar(&self) -> Coeff {
        Complex::new(BigRational::zero(), self.hbar.clone())
    }

    fn real(&self, r: &BigRational) -> Coeff {
        Complex::new(r.clone(), BigRational::zero())
    }
}

/// Multiplication operator `p_mu`.
pub fn momentum_operator(mu: usize) -> DiffOperator {
    DiffOperator::mul_by(Poly::var(mu))
}

/// Position operators determined by the deformed commutator
/// `[q_μ, p_ν] = -iħ(g_μν − δ²p_μp_ν)`:
///
/// `q_μ = -iħ(g_μν − δ²p_μp_ν)∂_ν + iħκp_μ`,
///
/// with the metric handled by explicit signs. Supported signatures are the
/// one-dimensional spatial case (a single operator) and the full
/// four-dimensional space-time (`q_0..q_3`).
pub fn position_operators(
    params: &ExactParams,
    sig: &SpaceTimeSignature,
) -> Result<Vec<DiffOperator>, ParamsError> {
    let n = sig.dim();
    if n != 1 && n != 4 {
        return Err(ParamsError::InvalidDimension(n));
    }
    let i_hbar = params.i_hbar();
    let mut ops = Vec::with_capacity(n);
    for mu in 0..n {
        let mut op = DiffOperator::zero();
        for nu in 0..n {
            // -iħ (g_μν − δ² p_μ p_ν) ∂_ν
            let mut coeff = Poly::zero();
            if mu == nu {
                let sign = sig.metric_sign(mu);
                coeff = &coeff + &Poly::constant(coeff_real(sign, 1));
            }
            let pp = (&Poly::var(mu) * &Poly::var(nu)).scale(&params.real(&params.delta_sq));
            coeff = &coeff - &pp;
            let coeff = coeff.scale(&(-i_hbar.clone()));
            op = &op + &DiffOperator::term(coeff, deriv_index(nu));
        }
        let kp = Poly::var(mu).scale(&(i_hbar.clone() * params.real(&params.kappa)));
        op = &op + &DiffOperator::mul_by(kp);
        ops.push(op);
    }
    Ok(ops)
}

/// Same as [`position_operators`] for the four-dimensional case but with the
/// sign of the first (pure-derivative) term of `q_0` flipped. Negative
/// control: the commutator table must catch this corruption.
pub fn position_operators_corrupted(params: &ExactParams) -> Vec<DiffOperator> {
    let sig = SpaceTimeSignature::new(4).unwrap();
    let mut ops = position_operators(params, &sig).unwrap();
    let i_hbar = params.i_hbar();
    // q_0 has -iħ ∂_0 from the metric term; flipping it adds +2iħ ∂_0.
    let flip = DiffOperator::term(Poly::constant(i_hbar * coeff_real(2, 1)), deriv_index(0));
    ops[0] = &ops[0] + &flip;
    ops
}

fn deriv_index(axis: usize) -> [u32; 4] {
    let mut d = [0u32; 4];
    d[axis] = 1;
    d
}

/// Levi-Civita symbol on `{1,2,3}` (spatial axes of the 4-dim signature).
fn epsilon(j: usize, k: usize, l: usize) -> i64 {
    match (j, k, l) {
        (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
        (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
        _ => 0,
    }
}

/// Rotation and boost generators built from their defining contractions
/// `L_j = ε_jkl q_k p_l` and `M_k = q_k p_0 − q_0 p_k`.
///
/// After exact normal ordering both reduce to the undeformed expressions
/// `L_j = -iħ ε_jkl p_k ∂_l` and `M_k = iħ(p_0 ∂_k + p_k ∂_0)`; every δ² and
/// κ contribution cancels, which `generators_are_deformation_free` checks
/// term by term.
pub fn lorentz_generators(params: &ExactParams) -> ([DiffOperator; 3], [DiffOperator; 3]) {
    let sig = SpaceTimeSignature::new(4).unwrap();
    let q = position_operators(params, &sig).unwrap();
    let p: Vec<DiffOperator> = (0..4).map(momentum_operator).collect();

    let rotation = std::array::from_fn(|idx| {
        let j = idx + 1;
        let mut op = DiffOperator::zero();
        for k in 1..4 {
            for l in 1..4 {
                let e = epsilon(j, k, l);
                if e != 0 {
                    op = &op + &q[k].compose(&p[l]).scale(&coeff_real(e, 1));
                }
            }
        }
        op
    });
    let boost = std::array::from_fn(|idx| {
        let k = idx + 1;
        &q[k].compose(&p[0]) - &q[0].compose(&p[k])
    });
    (rotation, boost)
}

/// Reference forms of the generators with no deformation parameters at all.
pub fn undeformed_generators() -> ([DiffOperator; 3], [DiffOperator; 3]) {
    let ih = coeff_i();
    let rotation = std::array::from_fn(|idx| {
        let j = idx + 1;
        let mut op = DiffOperator::zero();
        for k in 1..4 {
            for l in 1..4 {
                let e = epsilon(j, k, l);
                if e != 0 {
                    // -iħ ε_jkl p_k ∂_l  (ħ = 1 reference)
                    op = &op
                        + &DiffOperator::term(
                            Poly::var(k).scale(&(-ih.clone() * coeff_real(e, 1))),
                            deriv_index(l),
                        );
                }
            }
        }
        op
    });
    let boost = std::array::from_fn(|idx| {
        let k = idx + 1;
        let a = DiffOperator::term(Poly::var(0).scale(&ih), deriv_index(k));
        let b = DiffOperator::term(Poly::var(k).scale(&ih), deriv_index(0));
        &a + &b
    });
    (rotation, boost)
}

/// Background-space images `ζ_μ` of the position operators, acting on the
/// conjugate variables:
///
/// `ζ_μ = x_μ + ħ²δ² ∂_μ(x_ν ∂_ν) + ħ²(κ − N·δ²) ∂_μ`.
///
/// At `κ = N·δ²` the third structural term vanishes identically and the
/// operators reduce to the two-term quantized-space-time form.
pub fn background_operators(
    params: &ExactParams,
    sig: &SpaceTimeSignature,
) -> Result<Vec<DiffOperator>, ParamsError> {
    let n = sig.dim();
    if n != 4 {
        return Err(ParamsError::InvalidDimension(n));
    }
    let hbar_sq = params.real(&(params.hbar.clone() * params.hbar.clone()));
    let third_coeff = {
        let n_rat = rat(n as i64, 1);
        params.kappa.clone() - n_rat * params.delta_sq.clone()
    };

    let euler = {
        // x_ν ∂_ν as a single operator
        let mut op = DiffOperator::zero();
        for nu in 0..n {
            op = &op + &DiffOperator::term(Poly::var(nu), deriv_index(nu));
        }
        op
    };

    let mut ops = Vec::with_capacity(n);
    for mu in 0..n {
        let mut op = DiffOperator::mul_by(Poly::var(mu));
        let second = DiffOperator::partial(mu)
            .compose(&euler)
            .scale(&(hbar_sq.clone() * params.real(&params.delta_sq)));
        op = &op + &second;
        let third = DiffOperator::partial(mu).scale(&(hbar_sq.clone() * params.real(&third_coeff)));
        op = &op + &third;
        ops.push(op);
    }
    Ok(ops)
}

/// The two-term form `x_μ + ħ²δ² ∂_μ(x_ν ∂_ν)`: what `background_operators`
/// must reduce to at `κ = N·δ²`.
pub fn background_operators_two_term(
    params: &ExactParams,
    sig: &SpaceTimeSignature,
) -> Result<Vec<DiffOperator>, ParamsError> {
    let reduced = ExactParams {
        hbar: params.hbar.clone(),
        delta_sq: params.delta_sq.clone(),
        kappa: rat(sig.dim() as i64, 1) * params.delta_sq.clone(),
    };
    background_operators(&reduced, sig)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::coeff_imag;

    fn sig4() -> SpaceTimeSignature {
        SpaceTimeSignature::new(4).unwrap()
    }

    fn sig1() -> SpaceTimeSignature {
        SpaceTimeSignature::new(1).unwrap()
    }

    #[test]
    fn undeformed_limit_is_i_hbar_ddp() {
        // δ² = 0, κ = 0, one dimension: q = iħ d/dp
        let params = ExactParams::unit_hbar((0, 1), (0, 1));
        let q = position_operators(&params, &sig1()).unwrap();
        assert_eq!(q.len(), 1);
        assert_eq!(q[0], DiffOperator::partial(0).scale(&coeff_i()));
    }

    #[test]
    fn one_dim_deformed_commutator() {
        // [q, p] = iħ(1 + δ²p²) as a multiplication operator
        let params = ExactParams::unit_hbar((1, 3), (2, 1));
        let q = &position_operators(&params, &sig1()).unwrap()[0];
        let p = momentum_operator(0);
        let comm = q.commutator(&p);
        let expected = DiffOperator::mul_by(
            (&Poly::one() + &(&Poly::var(0) * &Poly::var(0)).scale(&coeff_real(1, 3)))
                .scale(&coeff_i()),
        );
        assert_eq!(comm, expected);
    }

    #[test]
    fn q_applied_to_constant_vanishes_at_zero_kappa() {
        let params = ExactParams::unit_hbar((1, 1), (0, 1));
        let q = &position_operators(&params, &sig1()).unwrap()[0];
        assert!(q.apply(&Poly::one()).is_zero());
    }

    #[test]
    fn spatial_operator_matches_expanded_form() {
        // q_1 = iħ[∂_1 + δ²p_1(p_ν ∂_ν)] + iħκ p_1
        let params = ExactParams::unit_hbar((1, 2), (1, 3));
        let q = position_operators(&params, &sig4()).unwrap();
        let ih = coeff_i();
        let mut expected = DiffOperator::partial(1).scale(&ih);
        for nu in 0..4 {
            let coeff = (&Poly::var(1) * &Poly::var(nu)).scale(&(ih.clone() * coeff_real(1, 2)));
            expected = &expected + &DiffOperator::term(coeff, deriv_index(nu));
        }
        expected = &expected + &DiffOperator::mul_by(Poly::var(1).scale(&coeff_imag(1, 3)));
        assert_eq!(q[1], expected);
    }

    #[test]
    fn temporal_commutator_action_on_monomials() {
        // [q_0, p_0] must act as multiplication by -iħ(1 − δ²p_0²)
        let params = ExactParams::unit_hbar((1, 3), (5, 7));
        let q = position_operators(&params, &sig4()).unwrap();
        let comm = q[0].commutator(&momentum_operator(0));
        let factor = (&Poly::one() - &(&Poly::var(0) * &Poly::var(0)).scale(&coeff_real(1, 3)))
            .scale(&(-coeff_i()));
        for exps in [[0, 0, 0, 0], [2, 1, 0, 3], [1, 1, 1, 1]] {
            let mono = Poly::monomial(exps, coeff_real(1, 1));
            assert_eq!(comm.apply(&mono), &factor * &mono);
        }
    }

    #[test]
    fn generators_are_deformation_free() {
        let reference = undeformed_generators();
        for (dsq, kappa) in [((0, 1), (0, 1)), ((1, 2), (0, 1)), ((1, 3), (7, 5))] {
            let params = ExactParams::unit_hbar(dsq, kappa);
            let (rot, boost) = lorentz_generators(&params);
            assert_eq!(rot, reference.0);
            assert_eq!(boost, reference.1);
        }
    }

    #[test]
    fn generator_actions_on_monomials() {
        let params = ExactParams::unit_hbar((1, 2), (0, 1));
        let (rot, boost) = lorentz_generators(&params);
        // L_3 p_1 = iħ p_2
        assert_eq!(rot[2].apply(&Poly::var(1)), Poly::var(2).scale(&coeff_i()));
        // M_1 p_0 = iħ p_1
        assert_eq!(
            boost[0].apply(&Poly::var(0)),
            Poly::var(1).scale(&coeff_i())
        );
    }

    #[test]
    fn background_reduces_at_special_kappa() {
        // κ = N δ² removes the constant-coefficient derivative term
        let params = ExactParams::unit_hbar((1, 3), (4, 3));
        let zeta = background_operators(&params, &sig4()).unwrap();
        let two_term = background_operators_two_term(&params, &sig4()).unwrap();
        assert_eq!(zeta, two_term);
    }

    #[test]
    fn background_undeformed_is_pure_multiplication() {
        let params = ExactParams::unit_hbar((0, 1), (0, 1));
        let zeta = background_operators(&params, &sig4()).unwrap();
        for (mu, op) in zeta.iter().enumerate() {
            assert_eq!(*op, DiffOperator::mul_by(Poly::var(mu)));
        }
    }

    #[test]
    fn background_action_expanded_exactly() {
        // ζ_1 x_1 at δ² = 1, κ = 0, ħ = 1, N = 4:
        // x_1·x_1 + ∂_1(x_ν∂_ν)(x_1) + (0 − 4)∂_1(x_1) = x_1² + 1 − 4
        let params = ExactParams::unit_hbar((1, 1), (0, 1));
        let zeta = background_operators(&params, &sig4()).unwrap();
        let expected = &(&Poly::var(1) * &Poly::var(1)) + &Poly::constant(coeff_real(-3, 1));
        assert_eq!(zeta[1].apply(&Poly::var(1)), expected);
        // mixed action picks up only the Euler term: ζ_1 x_2 = x_1 x_2
        assert_eq!(zeta[1].apply(&Poly::var(2)), &Poly::var(1) * &Poly::var(2));
    }

    #[test]
    fn rejects_unsupported_dimension() {
        let params = ExactParams::unit_hbar((1, 2), (0, 1));
        for n in [2, 3] {
            let sig = SpaceTimeSignature::new(n).unwrap();
            assert!(position_operators(&params, &sig).is_err());
        }
    }
}
