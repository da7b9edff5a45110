//! Orthogonal polynomials, log-gamma, and Gauss–Legendre quadrature.
//!
//! Everything is evaluated by forward recurrence, which is stable in the
//! parameter ranges the spectra need (indices up to a few tens, Gegenbauer
//! and Jacobi parameters up to ~1e4 for small-deformation sweeps). The
//! exact-series cross-checks live in the test module.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SpecFunError {
    NegativeIndex(&'static str),
    OutOfDomain { what: &'static str, value: f64 },
    BadOrder(usize),
}

impl fmt::Display for SpecFunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecFunError::NegativeIndex(which) => write!(f, "negative index for {which}"),
            SpecFunError::OutOfDomain { what, value } => {
                write!(f, "{what} out of domain: {value}")
            }
            SpecFunError::BadOrder(n) => write!(f, "quadrature order must be >= 1, got {n}"),
        }
    }
}

impl std::error::Error for SpecFunError {}

/// Gegenbauer polynomial `C_n^a(x)` by the three-term recurrence
/// `n C_n = 2x(n+a-1) C_{n-1} - (n+2a-2) C_{n-2}`, `C_0 = 1`, `C_1 = 2ax`.
pub fn gegenbauer(n: i64, a: f64, x: f64) -> Result<f64, SpecFunError> {
    if n < 0 {
        return Err(SpecFunError::NegativeIndex("gegenbauer"));
    }
    if !(a > -0.5) {
        return Err(SpecFunError::OutOfDomain {
            what: "gegenbauer parameter a",
            value: a,
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * a * x;
    for k in 2..=n {
        let k = k as f64;
        let next = (2.0 * x * (k + a - 1.0) * cur - (k + 2.0 * a - 2.0) * prev) / k;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Jacobi polynomial `P_n^{(a,b)}(x)` by the standard recurrence;
/// `P_0 = 1`, `P_1 = (a-b)/2 + (a+b+2)x/2`.
pub fn jacobi(n: i64, a: f64, b: f64, x: f64) -> Result<f64, SpecFunError> {
    if n < 0 {
        return Err(SpecFunError::NegativeIndex("jacobi"));
    }
    if !(a > -1.0) || !(b > -1.0) {
        return Err(SpecFunError::OutOfDomain {
            what: "jacobi parameters",
            value: if a <= -1.0 { a } else { b },
        });
    }
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    for k in 2..=n {
        let k = k as f64;
        let c1 = 2.0 * k * (k + a + b) * (2.0 * k + a + b - 2.0);
        let c2 = (2.0 * k + a + b - 1.0)
            * ((2.0 * k + a + b) * (2.0 * k + a + b - 2.0) * x + a * a - b * b);
        let c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * (2.0 * k + a + b);
        let next = (c2 * cur - c3 * prev) / c1;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Associated Laguerre polynomial `L_n^k(x)`;
/// `L_0 = 1`, `L_1 = 1 + k - x`, `n L_n = (2n+k-1-x) L_{n-1} - (n+k-1) L_{n-2}`.
pub fn assoc_laguerre(n: i64, k: i64, x: f64) -> Result<f64, SpecFunError> {
    if n < 0 || k < 0 {
        return Err(SpecFunError::NegativeIndex("assoc_laguerre"));
    }
    let kf = k as f64;
    if n == 0 {
        return Ok(1.0);
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + kf - x;
    for m in 2..=n {
        let m = m as f64;
        let next = ((2.0 * m + kf - 1.0 - x) * cur - (m + kf - 1.0) * prev) / m;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

// Lanczos approximation, g = 7, 9 terms (double precision).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0`.
pub fn log_gamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(SpecFunError::OutOfDomain {
            what: "log_gamma argument",
            value: x,
        });
    }
    // reflection is never needed for x > 0; recurse below 0.5 for accuracy
    if x < 0.5 {
        // ln Γ(x) = ln Γ(x+1) − ln x
        return Ok(log_gamma(x + 1.0)? - x.ln());
    }
    let z = x - 1.0;
    let mut acc = LANCZOS_COEFF[0];
    for (i, &c) in LANCZOS_COEFF.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (z + 0.5) * t.ln() - t + acc.ln())
}

/// Gauss–Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub order: usize,
}

impl QuadratureRule {
    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }

    /// Integrate over `[a, b]` through an affine map.
    pub fn integrate_on<F: FnMut(f64) -> f64>(&self, a: f64, b: f64, mut f: F) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        half * self.integrate(|t| f(mid + half * t))
    }
}

/// Nodes are the Legendre roots refined by Newton iteration to 1e-14;
/// weights are `2 / ((1-x²) P_n'(x)²)`.
pub fn gauss_legendre(order: usize) -> Result<QuadratureRule, SpecFunError> {
    if order < 1 {
        return Err(SpecFunError::BadOrder(order));
    }
    let n = order;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi-style initial guess
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_and_derivative(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        let (_, d) = legendre_and_derivative(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (d * d);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        order,
    })
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}
