//! Exact algebra of differential operators with polynomial coefficients.
//!
//! Coefficients are Gaussian rationals, so every identity of the deformed
//! commutator table is decided exactly — no tolerances, no floating point.

pub mod builders;
pub mod operator;
pub mod poly;
pub mod verify;

pub use builders::{
    background_operators, background_operators_two_term, lorentz_generators, momentum_operator,
    position_operators, position_operators_corrupted, undeformed_generators, ExactParams,
};
pub use operator::DiffOperator;
pub use poly::{coeff_i, coeff_imag, coeff_real, rat, Coeff, Poly};
pub use verify::{
    commutator_table, commutator_table_with, run_commutator_table, run_table, verify_identity,
    verify_identity_labeled, IdentityReport, TableIdentity,
};
