//! Independent numerical verification pipeline: momentum grids,
//! discretized operators, an in-repo symmetric eigensolver, and Richardson
//! extrapolation. No code is shared with the closed-form module; agreement
//! between the two certifies both.

pub mod assemble;
pub mod eigen;
pub mod grid;
pub mod richardson;
pub mod spectra;

pub use assemble::{hamiltonian_1d, hamiltonian_radial, position_matrix_1d, AssembleError};
pub use eigen::{eig_sym, DenseSymMatrix, EigenError, EigenSolve, SymTridiagonal};
pub use grid::{default_p_max, GridError, GridKind, MomentumGrid};
pub use richardson::{richardson, Extrapolation, RichardsonError};
pub use spectra::{
    position_lattice, spectrum_1d, spectrum_radial, Discretization1D, EigenReport, NumericError,
};
