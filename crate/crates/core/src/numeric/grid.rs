//! Mapped one-dimensional momentum grids for the discretized eigenproblems.
//!
//! Three coordinates are used, chosen so that a bug in one map cannot
//! silently confirm the closed forms derived in the other:
//!
//! * `compact_theta`: θ = arctan(δp) maps the whole momentum line onto the
//!   open interval (−π/2, π/2) — no domain truncation at all;
//! * `truncated_p`: plain momentum on [−P, P] with decaying boundaries;
//! * `radial_p`: radial momentum on (0, P] with the measure `p²dp/W`.

use crate::params::DeformationParams;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum GridError {
    TooFew { n: usize, min: usize },
    NeedsDeformation(&'static str),
    BadExtent(f64),
}

impl fmt::Display for GridError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GridError::TooFew { n, min } => write!(f, "grid needs at least {min} nodes, got {n}"),
            GridError::NeedsDeformation(what) => write!(f, "{what} requires δ > 0"),
            GridError::BadExtent(p) => write!(f, "grid extent must be positive, got {p}"),
        }
    }
}

impl std::error::Error for GridError {}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridKind {
    CompactTheta,
    TruncatedP { p_max: f64 },
    RadialP { p_max: f64 },
}

/// Uniform grid in a working coordinate `u`, with the map to physical
/// momentum, its Jacobian `dp/du`, and the measure weight sampled at the
/// nodes. Endpoints are excluded (open intervals); `compact_theta` has no
/// endpoints to truncate in the first place.
#[derive(Debug, Clone)]
pub struct MomentumGrid {
    pub kind: GridKind,
    /// Working coordinates, strictly increasing, uniform spacing `h`.
    pub nodes: Vec<f64>,
    pub h: f64,
    /// Physical momentum at each node.
    pub p: Vec<f64>,
    /// `dp/du > 0` at each node.
    pub jacobian: Vec<f64>,
    /// Measure weight `w(u)`: the inner product is `Σ w_i f_i g_i h`.
    pub weight: Vec<f64>,
    params: DeformationParams,
    beta: f64,
}

impl MomentumGrid {
    /// θ-grid with `n` subintervals of (−π/2, π/2): n−1 interior nodes.
    ///
    /// Sizing by subintervals makes the spacing halve exactly when `n`
    /// doubles, which Richardson extrapolation relies on.
    pub fn compact_theta(params: &DeformationParams, n: usize) -> Result<Self, GridError> {
        if n < 16 {
            return Err(GridError::TooFew { n, min: 16 });
        }
        if params.delta_sq() == 0.0 {
            return Err(GridError::NeedsDeformation("compact_theta"));
        }
        let beta = beta_1d(params);
        let h = std::f64::consts::PI / n as f64;
        let delta = params.delta();
        let mut nodes = Vec::with_capacity(n - 1);
        let mut p = Vec::with_capacity(n - 1);
        let mut jacobian = Vec::with_capacity(n - 1);
        let mut weight = Vec::with_capacity(n - 1);
        for i in 1..n {
            let theta = -0.5 * std::f64::consts::PI + i as f64 * h;
            let sec_sq = 1.0 / (theta.cos() * theta.cos());
            nodes.push(theta);
            p.push(theta.tan() / delta);
            jacobian.push(sec_sq / delta);
            weight.push(sec_sq.powf(beta) / delta);
        }
        Ok(MomentumGrid {
            kind: GridKind::CompactTheta,
            nodes,
            h,
            p,
            jacobian,
            weight,
            params: *params,
            beta,
        })
    }

    /// Momentum grid with `n` subintervals of (−p_max, p_max): n−1
    /// interior nodes, Dirichlet ends.
    pub fn truncated_p(
        params: &DeformationParams,
        n: usize,
        p_max: f64,
    ) -> Result<Self, GridError> {
        if n < 16 {
            return Err(GridError::TooFew { n, min: 16 });
        }
        if !(p_max > 0.0) {
            return Err(GridError::BadExtent(p_max));
        }
        let beta = beta_1d(params);
        let dsq = params.delta_sq();
        let h = 2.0 * p_max / n as f64;
        let mut nodes = Vec::with_capacity(n - 1);
        let mut weight = Vec::with_capacity(n - 1);
        for i in 1..n {
            let pi = -p_max + i as f64 * h;
            nodes.push(pi);
            weight.push((1.0 + dsq * pi * pi).powf(beta - 1.0));
        }
        Ok(MomentumGrid {
            kind: GridKind::TruncatedP { p_max },
            p: nodes.clone(),
            jacobian: vec![1.0; n],
            nodes,
            h,
            weight,
            params: *params,
            beta,
        })
    }

    /// Radial grid: n staggered nodes `p_i = (i − ½)h` of (0, p_max],
    /// measure weight `p²(1+δ²p²)^{β−1}` with the three-dimensional β.
    pub fn radial_p(params: &DeformationParams, n: usize, p_max: f64) -> Result<Self, GridError> {
        if n < 16 {
            return Err(GridError::TooFew { n, min: 16 });
        }
        if !(p_max > 0.0) {
            return Err(GridError::BadExtent(p_max));
        }
        let beta = beta_radial(params);
        let dsq = params.delta_sq();
        let h = p_max / n as f64;
        let mut nodes = Vec::with_capacity(n);
        let mut weight = Vec::with_capacity(n);
        for i in 1..=n {
            let pi = (i as f64 - 0.5) * h;
            nodes.push(pi);
            weight.push(pi * pi * (1.0 + dsq * pi * pi).powf(beta - 1.0));
        }
        Ok(MomentumGrid {
            kind: GridKind::RadialP { p_max },
            p: nodes.clone(),
            jacobian: vec![1.0; n],
            nodes,
            h,
            weight,
            params: *params,
            beta,
        })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn params(&self) -> &DeformationParams {
        &self.params
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Measure weight as a function of the working coordinate (the
    /// assemblers need it at cell interfaces, not just at nodes).
    pub fn weight_at(&self, u: f64) -> f64 {
        let dsq = self.params.delta_sq();
        match self.kind {
            GridKind::CompactTheta => {
                let sec_sq = 1.0 / (u.cos() * u.cos());
                sec_sq.powf(self.beta) / self.params.delta()
            }
            GridKind::TruncatedP { .. } => (1.0 + dsq * u * u).powf(self.beta - 1.0),
            GridKind::RadialP { .. } => u * u * (1.0 + dsq * u * u).powf(self.beta - 1.0),
        }
    }
}

/// `β = κ/δ²` for the one-dimensional signature.
fn beta_1d(params: &DeformationParams) -> f64 {
    let dsq = params.delta_sq();
    if dsq > 0.0 {
        params.kappa() / dsq
    } else {
        0.0
    }
}

/// `β = κ/δ² − 1` for the three-dimensional signature.
fn beta_radial(params: &DeformationParams) -> f64 {
    let dsq = params.delta_sq();
    if dsq > 0.0 {
        params.kappa() / dsq - 1.0
    } else {
        -1.0
    }
}

/// Default extent for truncated grids: far enough out that the slowest
/// power-law tail of any requested bound state is below ~1e−12 at the
/// boundary. The tail exponent comes from the large-p balance of the
/// operator itself (`ψ ~ (δ²p²)^σ` with `4|σ| ≈ 1 + √(1+1/ε²)`), so the
/// pipeline stays independent of the closed-form module.
pub fn default_p_max(params: &DeformationParams, n_max: u32) -> f64 {
    // undeformed scale: Gaussian tails, turning point √(2mE)/ħ-ish
    let gauss = {
        let e_scale = params.hbar() * params.omega() * (n_max as f64 + 1.5);
        let p_turn = (2.0 * params.mass() * e_scale).sqrt();
        (3.0 * p_turn).max(12.0)
    };
    let dsq = params.delta_sq();
    let eps = params.eps();
    if dsq == 0.0 || eps == 0.0 {
        return gauss;
    }
    let two_sigma = 0.5 * (1.0 + (1.0 + 1.0 / (eps * eps)).sqrt());
    // (1 + δ²P²)^{−2|σ|} < 1e−12
    let target = 10f64.powf(12.0 / two_sigma);
    let p_tail = ((target - 1.0).max(1.0)).sqrt() / params.delta();
    gauss.max(1.15 * p_tail).min(1e4)
}
