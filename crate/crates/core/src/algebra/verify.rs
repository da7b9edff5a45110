//! Exact verification of operator identities on graded polynomial bases.
//!
//! An identity `lhs = rhs` between operators with polynomial coefficients is
//! certified by applying `lhs − rhs` to every monomial of bounded total
//! degree in the active variables: a differential operator of finite order
//! with polynomial coefficients is zero iff it annihilates all monomials, so
//! an empty residual list up to the requested degree certifies the identity
//! on the whole graded slice.

use super::builders::{lorentz_generators, momentum_operator, position_operators, ExactParams};
use super::operator::DiffOperator;
use super::poly::{coeff_i, coeff_real, Coeff, Poly, NVARS};
use crate::params::SpaceTimeSignature;
use num_traits::{One, Zero};
use serde::Serialize;

/// Outcome of one identity check.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub lhs: String,
    pub rhs: String,
    pub max_degree: u32,
    pub residual_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_monomial: Option<String>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.residual_count == 0
    }
}

/// Apply `lhs − rhs` to every monomial of total degree ≤ `max_degree` in the
/// variables the two operators actually touch, and report the failures.
pub fn verify_identity(lhs: &DiffOperator, rhs: &DiffOperator, max_degree: u32) -> IdentityReport {
    verify_identity_labeled(lhs, rhs, max_degree, &lhs.to_string(), &rhs.to_string())
}

pub fn verify_identity_labeled(
    lhs: &DiffOperator,
    rhs: &DiffOperator,
    max_degree: u32,
    lhs_label: &str,
    rhs_label: &str,
) -> IdentityReport {
    let diff = lhs - rhs;
    let mut residual_count = 0;
    let mut first_failing_monomial = None;

    let mut active = diff.active_vars();
    if active.iter().all(|a| !a) {
        // constant operators: the constant monomial decides
        active[0] = true;
    }
    let axes: Vec<usize> = (0..NVARS).filter(|&i| active[i]).collect();

    for exps in monomials_up_to(&axes, max_degree) {
        let image = diff.apply(&Poly::monomial(exps, Coeff::one()));
        if !image.is_zero() {
            residual_count += 1;
            if first_failing_monomial.is_none() {
                first_failing_monomial = Some(super::poly::fmt_monomial_or_one(&exps, 'p'));
            }
        }
    }

    IdentityReport {
        lhs: lhs_label.to_string(),
        rhs: rhs_label.to_string(),
        max_degree,
        residual_count,
        first_failing_monomial,
    }
}

/// All exponent multi-indices supported on `axes` with total degree ≤ `max`.
fn monomials_up_to(axes: &[usize], max: u32) -> Vec<[u32; NVARS]> {
    let mut out = Vec::new();
    let mut current = [0u32; NVARS];
    fn rec(
        axes: &[usize],
        pos: usize,
        remaining: u32,
        current: &mut [u32; NVARS],
        out: &mut Vec<[u32; NVARS]>,
    ) {
        if pos == axes.len() {
            out.push(*current);
            return;
        }
        for e in 0..=remaining {
            current[axes[pos]] = e;
            rec(axes, pos + 1, remaining - e, current, out);
        }
        current[axes[pos]] = 0;
    }
    rec(axes, 0, max, &mut current, &mut out);
    out
}

/// One named identity of the commutator table.
#[derive(Debug, Clone)]
pub struct TableIdentity {
    pub name: String,
    pub lhs: DiffOperator,
    pub rhs: DiffOperator,
}

/// The full four-dimensional commutator table of the deformed algebra:
///
/// * `[q_μ, p_ν] = -iħ(g_μν − δ²p_μp_ν)`
/// * `[p_μ, p_ν] = 0`
/// * `[L_j, L_k] = iħ ε_jkl L_l`
/// * `[M_j, M_k] = -iħ ε_jkl L_l`  (boosts close into rotations)
/// * `[L_j, M_k] = iħ ε_jkl M_l`
/// * `[q_j, q_k] = iħ δ² ε_jkl L_l`
/// * `[q_0, q_k] = -iħ δ² M_k`
/// * `[q_j, L_k] = iħ ε_jkl q_l`
/// * `[p_j, L_k] = iħ ε_jkl p_l`
///
/// The signs follow from exact expansion of the definitions above; they are
/// what the machine-checked algebra certifies.
pub fn commutator_table(params: &ExactParams) -> Vec<TableIdentity> {
    commutator_table_with(params, None)
}

/// Same table, optionally with externally supplied (possibly corrupted)
/// position operators for negative-control runs.
pub fn commutator_table_with(
    params: &ExactParams,
    position_override: Option<Vec<DiffOperator>>,
) -> Vec<TableIdentity> {
    let sig = SpaceTimeSignature::new(4).unwrap();
    let q = position_override.unwrap_or_else(|| position_operators(params, &sig).unwrap());
    let p: Vec<DiffOperator> = (0..4).map(momentum_operator).collect();
    let (rot, boost) = lorentz_generators(params);

    let i_hbar = coeff_i() * coeff_real_from(&params.hbar);
    let dsq = coeff_real_from(&params.delta_sq);

    let mut table = Vec::new();

    // [q_mu, p_nu] = -iħ(g_μν − δ² p_μ p_ν)
    for mu in 0..4 {
        for nu in 0..4 {
            let mut metric = Poly::zero();
            if mu == nu {
                metric = Poly::constant(coeff_real(sig.metric_sign(mu), 1));
            }
            let pp = (&Poly::var(mu) * &Poly::var(nu)).scale(&dsq);
            let rhs = DiffOperator::mul_by((&metric - &pp).scale(&(-i_hbar.clone())));
            table.push(TableIdentity {
                name: format!("[q{mu}, p{nu}] = -i*hbar*(g{mu}{nu} - delta_sq*p{mu}*p{nu})"),
                lhs: q[mu].commutator(&p[nu]),
                rhs,
            });
        }
    }

    // [p_mu, p_nu] = 0
    for mu in 0..4 {
        for nu in (mu + 1)..4 {
            table.push(TableIdentity {
                name: format!("[p{mu}, p{nu}] = 0"),
                lhs: p[mu].commutator(&p[nu]),
                rhs: DiffOperator::zero(),
            });
        }
    }

    let eps = |j: usize, k: usize, l: usize| -> i64 {
        match (j, k, l) {
            (1, 2, 3) | (2, 3, 1) | (3, 1, 2) => 1,
            (3, 2, 1) | (1, 3, 2) | (2, 1, 3) => -1,
            _ => 0,
        }
    };
    let eps_combo = |j: usize, k: usize, ops: &[DiffOperator; 3]| -> DiffOperator {
        let mut rhs = DiffOperator::zero();
        for l in 1..4 {
            let e = eps(j, k, l);
            if e != 0 {
                rhs = &rhs + &ops[l - 1].scale(&coeff_real(e, 1));
            }
        }
        rhs
    };

    for j in 1..4 {
        for k in 1..4 {
            // [L_j, L_k] = iħ ε_jkl L_l
            table.push(TableIdentity {
                name: format!("[L{j}, L{k}] = i*hbar*eps({j}{k}l)*Ll"),
                lhs: rot[j - 1].commutator(&rot[k - 1]),
                rhs: eps_combo(j, k, &rot).scale(&i_hbar),
            });
            // [M_j, M_k] = -iħ ε_jkl L_l
            table.push(TableIdentity {
                name: format!("[M{j}, M{k}] = -i*hbar*eps({j}{k}l)*Ll"),
                lhs: boost[j - 1].commutator(&boost[k - 1]),
                rhs: eps_combo(j, k, &rot).scale(&(-i_hbar.clone())),
            });
            // [L_j, M_k] = iħ ε_jkl M_l
            table.push(TableIdentity {
                name: format!("[L{j}, M{k}] = i*hbar*eps({j}{k}l)*Ml"),
                lhs: rot[j - 1].commutator(&boost[k - 1]),
                rhs: eps_combo(j, k, &boost).scale(&i_hbar),
            });
            // [q_j, q_k] = iħ δ² ε_jkl L_l
            table.push(TableIdentity {
                name: format!("[q{j}, q{k}] = i*hbar*delta_sq*eps({j}{k}l)*Ll"),
                lhs: q[j].commutator(&q[k]),
                rhs: eps_combo(j, k, &rot).scale(&(i_hbar.clone() * dsq.clone())),
            });
            // [q_j, L_k] = iħ ε_jkl q_l
            let q_spatial: [DiffOperator; 3] = std::array::from_fn(|i| q[i + 1].clone());
            table.push(TableIdentity {
                name: format!("[q{j}, L{k}] = i*hbar*eps({j}{k}l)*ql"),
                lhs: q[j].commutator(&rot[k - 1]),
                rhs: eps_combo(j, k, &q_spatial).scale(&i_hbar),
            });
            // [p_j, L_k] = iħ ε_jkl p_l
            let p_spatial: [DiffOperator; 3] = std::array::from_fn(|i| p[i + 1].clone());
            table.push(TableIdentity {
                name: format!("[p{j}, L{k}] = i*hbar*eps({j}{k}l)*pl"),
                lhs: p[j].commutator(&rot[k - 1]),
                rhs: eps_combo(j, k, &p_spatial).scale(&i_hbar),
            });
        }
        // [q_0, q_k] = -iħ δ² M_k
        let k = j;
        table.push(TableIdentity {
            name: format!("[q0, q{k}] = -i*hbar*delta_sq*M{k}"),
            lhs: q[0].commutator(&q[k]),
            rhs: boost[k - 1].scale(&(-(i_hbar.clone() * dsq.clone()))),
        });
    }

    table
}

fn coeff_real_from(r: &num_rational::BigRational) -> Coeff {
    Coeff::new(r.clone(), num_rational::BigRational::zero())
}

/// Run the whole table at a given degree; returns `(name, report)` pairs.
pub fn run_commutator_table(
    params: &ExactParams,
    max_degree: u32,
) -> Vec<(String, IdentityReport)> {
    run_table(commutator_table(params), max_degree)
}

pub fn run_table(table: Vec<TableIdentity>, max_degree: u32) -> Vec<(String, IdentityReport)> {
    table
        .into_iter()
        .map(|id| {
            let report = verify_identity_labeled(&id.lhs, &id.rhs, max_degree, &id.name, &id.name);
            (id.name, report)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::position_operators_corrupted;
    use crate::rng::SeqRng;

    #[test]
    fn rotation_closure_holds() {
        let params = ExactParams::unit_hbar((1, 3), (0, 1));
        let (rot, _) = lorentz_generators(&params);
        let rhs = rot[2].scale(&coeff_i());
        let report = verify_identity(&rot[0].commutator(&rot[1]), &rhs, 6);
        assert!(report.holds(), "residuals: {}", report.residual_count);
    }

    #[test]
    fn position_noncommutativity_holds() {
        let params = ExactParams::unit_hbar((1, 3), (1, 2));
        let sig = SpaceTimeSignature::new(4).unwrap();
        let q = position_operators(&params, &sig).unwrap();
        let (rot, boost) = lorentz_generators(&params);
        // [q_1, q_2] = iħ δ² L_3
        let rhs = rot[2].scale(&(coeff_i() * coeff_real(1, 3)));
        assert!(verify_identity(&q[1].commutator(&q[2]), &rhs, 6).holds());
        // [q_0, q_1] = -iħ δ² M_1
        let rhs = boost[0].scale(&(coeff_i() * coeff_real(-1, 3)));
        assert!(verify_identity(&q[0].commutator(&q[1]), &rhs, 6).holds());
    }

    #[test]
    fn full_table_passes_across_parameter_grid() {
        // δ² ∈ {0, 1, 1/3}, κ ∈ {0, δ², (N+1)δ²/2}, max degree 6
        for dsq in [(0i64, 1i64), (1, 1), (1, 3)] {
            for kmul in [(0i64, 1i64), (1, 1), (5, 2)] {
                let kappa = (dsq.0 * kmul.0, dsq.1 * kmul.1);
                let params = ExactParams::unit_hbar(dsq, kappa);
                for (name, report) in run_commutator_table(&params, 6) {
                    assert!(
                        report.holds(),
                        "identity failed: {name} at delta_sq={dsq:?} kappa={kappa:?}, \
                         first failing monomial {:?}",
                        report.first_failing_monomial
                    );
                }
            }
        }
    }

    #[test]
    fn corrupted_temporal_operator_is_caught() {
        let params = ExactParams::unit_hbar((1, 3), (0, 1));
        let corrupted = position_operators_corrupted(&params);
        let results = run_table(commutator_table_with(&params, Some(corrupted)), 4);
        let failing: Vec<_> = results
            .iter()
            .filter(|(_, r)| !r.holds())
            .map(|(n, _)| n.clone())
            .collect();
        assert!(!failing.is_empty());
        assert!(failing.iter().any(|n| n.contains("[q0, p0]")));
        let failed = results.iter().find(|(_, r)| !r.holds()).unwrap();
        assert!(failed.1.first_failing_monomial.is_some());
    }

    #[test]
    fn degree_zero_checks_constants_only() {
        let params = ExactParams::unit_hbar((1, 1), (0, 1));
        for (_, report) in run_commutator_table(&params, 0) {
            assert!(report.holds());
        }
    }

    #[test]
    fn jacobi_identity_on_random_triples() {
        let params = ExactParams::unit_hbar((1, 3), (1, 2));
        let sig = SpaceTimeSignature::new(4).unwrap();
        let mut pool = position_operators(&params, &sig).unwrap();
        pool.extend((0..4).map(momentum_operator));
        let (rot, boost) = lorentz_generators(&params);
        pool.extend(rot);
        pool.extend(boost);

        let mut rng = SeqRng::new(0xA1_5EED);
        for _ in 0..48 {
            let a = &pool[rng.next_below(pool.len() as u64) as usize];
            let b = &pool[rng.next_below(pool.len() as u64) as usize];
            let c = &pool[rng.next_below(pool.len() as u64) as usize];
            let jac = &(&a.commutator(&b.commutator(c)) + &b.commutator(&c.commutator(a)))
                + &c.commutator(&a.commutator(b));
            assert!(jac.is_zero(), "Jacobi identity failed for a random triple");
        }
    }

    #[test]
    fn report_serializes_to_json() {
        let params = ExactParams::unit_hbar((1, 2), (0, 1));
        let (rot, _) = lorentz_generators(&params);
        let report = verify_identity(&rot[0].commutator(&rot[1]), &rot[2].scale(&coeff_i()), 3);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"residual_count\":0"));
        assert!(!json.contains("first_failing_monomial"));
    }
}
