//! Differential operators with polynomial coefficients, stored in normal
//! order: every coefficient polynomial sits to the left of every derivative.
//! Composition re-normal-orders through the Leibniz rule, which makes the
//! representation canonical and operator equality decidable.

use super::poly::{coeff_real, Coeff, Exponents, Poly, NVARS};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Finite sum of `coefficient(p) · ∂^α` terms in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffOperator {
    terms: BTreeMap<Exponents, Poly>,
}

impl DiffOperator {
    pub fn zero() -> Self {
        DiffOperator::default()
    }

    /// The identity (multiplication by one).
    pub fn identity() -> Self {
        DiffOperator::mul_by(Poly::one())
    }

    /// Multiplication operator `f ↦ g·f`.
    pub fn mul_by(g: Poly) -> Self {
        let mut op = DiffOperator::default();
        if !g.is_zero() {
            op.terms.insert([0; NVARS], g);
        }
        op
    }

    /// First-order derivative `∂/∂p_axis`.
    pub fn partial(axis: usize) -> Self {
        assert!(axis < NVARS);
        let mut d = [0u32; NVARS];
        d[axis] = 1;
        DiffOperator::term(Poly::one(), d)
    }

    /// Single normal-ordered term `g(p) · ∂^derivs`.
    pub fn term(g: Poly, derivs: Exponents) -> Self {
        let mut op = DiffOperator::default();
        if !g.is_zero() {
            op.terms.insert(derivs, g);
        }
        op
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Poly)> {
        self.terms.iter()
    }

    /// Coefficient polynomial of `∂^derivs` (zero if absent).
    pub fn coefficient(&self, derivs: Exponents) -> Poly {
        self.terms.get(&derivs).cloned().unwrap_or_else(Poly::zero)
    }

    /// Highest derivative order.
    pub fn order(&self) -> u32 {
        self.terms
            .keys()
            .map(|d| d.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Variables appearing in coefficients or acted on by derivatives.
    pub fn active_vars(&self) -> [bool; NVARS] {
        let mut active = [false; NVARS];
        for (derivs, g) in &self.terms {
            for (axis, &d) in derivs.iter().enumerate() {
                if d > 0 {
                    active[axis] = true;
                }
            }
            for (axis, flag) in g.active_vars().iter().enumerate() {
                if *flag {
                    active[axis] = true;
                }
            }
        }
        active
    }

    fn add_term(&mut self, derivs: Exponents, g: Poly) {
        if g.is_zero() {
            return;
        }
        match self.terms.entry(derivs) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(g);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &g;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> DiffOperator {
        if c.is_zero() {
            return DiffOperator::zero();
        }
        let mut out = DiffOperator::default();
        for (derivs, g) in &self.terms {
            out.terms.insert(*derivs, g.scale(c));
        }
        out
    }

    /// Exact image `A f` of a polynomial; linear in `f`.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (derivs, g) in &self.terms {
            let mut df = f.clone();
            for (axis, &k) in derivs.iter().enumerate() {
                for _ in 0..k {
                    if df.is_zero() {
                        break;
                    }
                    df = df.derivative(axis);
                }
            }
            if !df.is_zero() {
                out = &out + &(g * &df);
            }
        }
        out
    }

    /// Operator composition `self ∘ rhs` (apply `rhs` first).
    ///
    /// `f ∂^α ∘ g ∂^β = Σ_{γ≤α} C(α,γ) f·(∂^γ g) ∂^{α−γ+β}` per axis.
    pub fn compose(&self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = DiffOperator::default();
        for (alpha, f) in &self.terms {
            for (beta, g) in &rhs.terms {
                for (gamma, binom) in sub_multi_indices(alpha) {
                    let mut dg = g.clone();
                    for (axis, &k) in gamma.iter().enumerate() {
                        for _ in 0..k {
                            if dg.is_zero() {
                                break;
                            }
                            dg = dg.derivative(axis);
                        }
                    }
                    if dg.is_zero() {
                        continue;
                    }
                    let mut derivs = [0u32; NVARS];
                    for i in 0..NVARS {
                        derivs[i] = alpha[i] - gamma[i] + beta[i];
                    }
                    let coeff = (f * &dg).scale(&coeff_real(binom as i64, 1));
                    out.add_term(derivs, coeff);
                }
            }
        }
        out
    }

    /// `[self, rhs] = self∘rhs − rhs∘self`.
    pub fn commutator(&self, rhs: &DiffOperator) -> DiffOperator {
        &self.compose(rhs) - &rhs.compose(self)
    }
}

/// All multi-indices `γ ≤ α` with the product of per-axis binomials
/// `C(α_i, γ_i)`.
fn sub_multi_indices(alpha: &Exponents) -> Vec<(Exponents, u64)> {
    let mut out = vec![([0u32; NVARS], 1u64)];
    for axis in 0..NVARS {
        let mut next = Vec::with_capacity(out.len() * (alpha[axis] as usize + 1));
        for (exps, b) in &out {
            let mut binom = 1u64;
            for k in 0..=alpha[axis] {
                if k > 0 {
                    binom = binom * (alpha[axis] - k + 1) as u64 / k as u64;
                }
                let mut e = *exps;
                e[axis] = k;
                next.push((e, b * binom));
            }
        }
        out = next;
    }
    out
}

impl Add<&DiffOperator> for &DiffOperator {
    type Output = DiffOperator;
    fn add(self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (derivs, g) in &rhs.terms {
            out.add_term(*derivs, g.clone());
        }
        out
    }
}

impl Sub<&DiffOperator> for &DiffOperator {
    type Output = DiffOperator;
    fn sub(self, rhs: &DiffOperator) -> DiffOperator {
        let mut out = self.clone();
        for (derivs, g) in &rhs.terms {
            out.add_term(*derivs, -g);
        }
        out
    }
}

impl Neg for &DiffOperator {
    type Output = DiffOperator;
    fn neg(self) -> DiffOperator {
        let mut out = DiffOperator::default();
        for (derivs, g) in &self.terms {
            out.terms.insert(*derivs, -g);
        }
        out
    }
}

impl Mul<&DiffOperator> for &DiffOperator {
    type Output = DiffOperator;
    fn mul(self, rhs: &DiffOperator) -> DiffOperator {
        self.compose(rhs)
    }
}

impl fmt::Display for DiffOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (derivs, g) in &self.terms {
            let dstr = super::poly::fmt_monomial(derivs, 'D');
            let gstr = g.to_string();
            let part = if dstr.is_empty() {
                gstr
            } else if gstr == "1" {
                dstr
            } else if g.num_terms() == 1 {
                format!("{gstr}*{dstr}")
            } else {
                format!("({gstr})*{dstr}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}
