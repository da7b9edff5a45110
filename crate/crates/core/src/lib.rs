//! Quantum mechanics with a deformed canonical commutation relation
//! `[q, p] = iħ(1 + δ²p²)` and its relativistic Snyder-type extension
//! `[q_μ, p_ν] = -iħ(g_μν - δ²p_μp_ν)`.
//!
//! The crate is organized around two independent routes to the same physics:
//!
//! * [`algebra`] works with exact Gaussian-rational arithmetic and certifies
//!   the full commutator table of the deformed operators on graded
//!   polynomial bases — no floating point, no tolerances.
//! * [`analytic`] evaluates the closed-form results (discrete position
//!   lattice, oscillator spectra, normalized eigenfunctions), while
//!   [`numeric`] rebuilds the same spectra by discretizing the operators on
//!   momentum grids and diagonalizing, sharing no code path with the closed
//!   forms. Agreement between the two is the crate's acceptance gate.
//!
//! [`params`] holds the physical constants and derived deformation scales;
//! [`specfun`] provides the orthogonal polynomials and quadrature both sides
//! rely on.

pub mod algebra;
pub mod analytic;
pub mod numeric;
pub mod params;
pub mod rng;
pub mod specfun;

pub use params::{DeformationParams, ParamsError, SpaceTimeSignature};
