//! Sparse multivariate polynomials in up to four momentum variables with
//! exact Gaussian-rational coefficients `a + b·i`, `a, b ∈ ℚ`.
//!
//! This is the carrier for every operator coefficient in the exact algebra:
//! canonical form stores no zero coefficients, so polynomial (and hence
//! operator) equality is decidable by direct comparison.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub const NVARS: usize = 4;

/// Exponent multi-index `(e0, e1, e2, e3)`.
pub type Exponents = [u32; NVARS];

/// Gaussian rational `a + b·i`.
pub type Coeff = Complex<BigRational>;

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn coeff_real(num: i64, den: i64) -> Coeff {
    Complex::new(rat(num, den), BigRational::zero())
}

pub fn coeff_imag(num: i64, den: i64) -> Coeff {
    Complex::new(BigRational::zero(), rat(num, den))
}

pub fn coeff_i() -> Coeff {
    coeff_imag(1, 1)
}

/// Sparse polynomial in canonical form (no stored zero coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Exponents, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert([0; NVARS], c);
        }
        p
    }

    /// The variable `p_axis`.
    pub fn var(axis: usize) -> Self {
        assert!(axis < NVARS);
        let mut exps = [0u32; NVARS];
        exps[axis] = 1;
        Poly::monomial(exps, Coeff::one())
    }

    pub fn monomial(exps: Exponents, c: Coeff) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Coeff)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Variables that actually occur.
    pub fn active_vars(&self) -> [bool; NVARS] {
        let mut active = [false; NVARS];
        for exps in self.terms.keys() {
            for (axis, &e) in exps.iter().enumerate() {
                if e > 0 {
                    active[axis] = true;
                }
            }
        }
        active
    }

    fn add_term(&mut self, exps: Exponents, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::default();
        for (exps, v) in &self.terms {
            out.terms.insert(*exps, v.clone() * c.clone());
        }
        out
    }

    /// Exact partial derivative along `axis`.
    pub fn derivative(&self, axis: usize) -> Poly {
        assert!(axis < NVARS);
        let mut out = Poly::default();
        for (exps, c) in &self.terms {
            if exps[axis] == 0 {
                continue;
            }
            let mut e = *exps;
            let k = e[axis];
            e[axis] -= 1;
            out.add_term(e, c.clone() * coeff_real(k as i64, 1));
        }
        out
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(*exps, c.clone());
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(*exps, -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let mut out = Poly::default();
        for (exps, c) in &self.terms {
            out.terms.insert(*exps, -c.clone());
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut exps = [0u32; NVARS];
                for i in 0..NVARS {
                    exps[i] = ea[i] + eb[i];
                }
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }
}

fn fmt_coeff(c: &Coeff) -> String {
    let re_zero = c.re.is_zero();
    let im_zero = c.im.is_zero();
    match (re_zero, im_zero) {
        (true, true) => "0".to_string(),
        (false, true) => format!("{}", c.re),
        (true, false) => {
            if c.im.is_one() {
                "i".to_string()
            } else if (-c.im.clone()).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", c.im)
            }
        }
        (false, false) => format!("({}{:+}i)", c.re, c.im),
    }
}

pub(crate) fn fmt_monomial_or_one(exps: &Exponents, letter: char) -> String {
    let s = fmt_monomial(exps, letter);
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

pub(crate) fn fmt_monomial(exps: &Exponents, letter: char) -> String {
    let mut s = String::new();
    for (axis, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        if e == 1 {
            s.push_str(&format!("{letter}{axis}"));
        } else {
            s.push_str(&format!("{letter}{axis}^{e}"));
        }
    }
    s
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (exps, c) in &self.terms {
            let mono = fmt_monomial(exps, 'p');
            let cs = fmt_coeff(c);
            let part = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(part);
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p_var(i: usize) -> Poly {
        Poly::var(i)
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = &p_var(0) - &p_var(0);
        assert!(p.is_zero());
        assert_eq!(p.num_terms(), 0);
        let q = &(&p_var(1) + &Poly::one()) - &Poly::one();
        assert_eq!(q, p_var(1));
    }

    #[test]
    fn derivative_basics() {
        // d/dp1 (p1^2) = 2 p1
        let sq = &p_var(1) * &p_var(1);
        assert_eq!(sq.derivative(1), p_var(1).scale(&coeff_real(2, 1)));
        assert!(Poly::one().derivative(0).is_zero());
    }

    #[test]
    fn display_readable() {
        let p = &Poly::one() + &(&p_var(0) * &p_var(0)).scale(&coeff_imag(-1, 2));
        assert_eq!(p.to_string(), "1 + -1/2i*p0^2");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec(
            (
                proptest::array::uniform4(0u32..3),
                -4i64..=4,
                1i64..=3,
                -4i64..=4,
            ),
            0..6,
        )
        .prop_map(|terms| {
            let mut p = Poly::zero();
            for (exps, re_num, den, im_num) in terms {
                p = &p + &Poly::monomial(exps, Coeff::new(rat(re_num, den), rat(im_num, den)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            // commutativity and distributivity, exact
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            // degree of a product is the sum of degrees
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!(
                    (&a * &b).total_degree(),
                    a.total_degree() + b.total_degree()
                );
            }
        }

        #[test]
        fn leibniz_rule(a in arb_poly(), b in arb_poly(), axis in 0usize..4) {
            let lhs = (&a * &b).derivative(axis);
            let rhs = &(&a.derivative(axis) * &b) + &(&a * &b.derivative(axis));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
