//! High-level spectrum drivers: assemble on a ladder of grids,
//! diagonalize, extrapolate, and package the diagnostics.
//!
//! Nothing here touches the closed-form module; these spectra are the
//! independent oracle the closed forms are checked against.

use super::assemble::{hamiltonian_1d, hamiltonian_radial, position_matrix_1d, AssembleError};
use super::eigen::{eig_sym, EigenError, SymTridiagonal};
use super::grid::{default_p_max, GridError, MomentumGrid};
use super::richardson::{richardson, Extrapolation, RichardsonError};
use crate::params::DeformationParams;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum NumericError {
    Grid(GridError),
    Assemble(AssembleError),
    Eigen(EigenError),
    Richardson(RichardsonError),
    /// The requested states do not decay before the grid boundary; enlarge
    /// the domain.
    DomainTruncation {
        boundary_amplitude: f64,
    },
}

impl fmt::Display for NumericError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NumericError::Grid(e) => write!(f, "{e}"),
            NumericError::Assemble(e) => write!(f, "{e}"),
            NumericError::Eigen(e) => write!(f, "{e}"),
            NumericError::Richardson(e) => write!(f, "{e}"),
            NumericError::DomainTruncation { boundary_amplitude } => write!(
                f,
                "eigenvector amplitude {boundary_amplitude:.3e} at the grid boundary; \
                 domain too small"
            ),
        }
    }
}

impl std::error::Error for NumericError {}

impl From<GridError> for NumericError {
    fn from(e: GridError) -> Self {
        NumericError::Grid(e)
    }
}
impl From<AssembleError> for NumericError {
    fn from(e: AssembleError) -> Self {
        NumericError::Assemble(e)
    }
}
impl From<EigenError> for NumericError {
    fn from(e: EigenError) -> Self {
        NumericError::Eigen(e)
    }
}
impl From<RichardsonError> for NumericError {
    fn from(e: RichardsonError) -> Self {
        NumericError::Richardson(e)
    }
}

/// Spectrum of one discretized operator across a ladder of grids.
#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    pub grid_sizes: Vec<usize>,
    /// Finest-grid eigenvalues, ascending (the requested count).
    pub eigenvalues: Vec<f64>,
    /// Richardson-extrapolated values (equal to `eigenvalues` when only one
    /// grid level was supplied).
    pub extrapolated: Vec<f64>,
    /// Estimated extrapolation error per eigenvalue (≥ 0).
    pub error_estimate: Vec<f64>,
    /// `‖Hv − Ev‖₂` at the finest grid for each reported level.
    pub residual_norms: Vec<f64>,
    /// Observed convergence order of the ground level, when measurable.
    pub apparent_order: Option<f64>,
    /// Any level whose observed order strayed > 30 % from nominal.
    pub order_warnings: usize,
}

impl EigenReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// CSV rows `level,eigenvalue,extrapolated,error_estimate,residual_norm`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("level,eigenvalue,extrapolated,error_estimate,residual_norm\n");
        for i in 0..self.eigenvalues.len() {
            out.push_str(&format!(
                "{},{:.12e},{:.12e},{:.12e},{:.12e}\n",
                i,
                self.eigenvalues[i],
                self.extrapolated[i],
                self.error_estimate[i],
                self.residual_norms[i]
            ));
        }
        out
    }
}

/// Which 1D discretization to use.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Discretization1D {
    /// Compact θ map when δ > 0 (no truncation), momentum grid otherwise.
    Auto,
    CompactTheta,
    /// Truncated momentum grid; `None` extent picks the tail-based default.
    TruncatedP(Option<f64>),
}

fn grid_1d(
    params: &DeformationParams,
    n_g: usize,
    disc: Discretization1D,
    n_levels: usize,
) -> Result<MomentumGrid, NumericError> {
    let make_truncated = |p_max: Option<f64>| {
        let extent = p_max.unwrap_or_else(|| default_p_max(params, n_levels as u32));
        MomentumGrid::truncated_p(params, n_g, extent)
    };
    let grid = match disc {
        Discretization1D::Auto => {
            if params.delta_sq() > 0.0 {
                MomentumGrid::compact_theta(params, n_g)
            } else {
                make_truncated(None)
            }
        }
        Discretization1D::CompactTheta => MomentumGrid::compact_theta(params, n_g),
        Discretization1D::TruncatedP(p_max) => make_truncated(p_max),
    };
    Ok(grid?)
}

/// Boundary-decay check on selected eigenvectors of the assembled matrix.
///
/// A relative boundary amplitude of 1e-5 shifts eigenvalues at the 1e-10
/// level (the perturbation is quadratic in the amplitude), so anything
/// below that is noise; anything above means the domain truncates the
/// state. `check_first` controls whether the first entry participates (the
/// radial grid has a natural zero-flux inner boundary where the s = 0
/// modes are legitimately finite).
fn check_boundary_decay(
    matrix: &SymTridiagonal,
    eigenvalues: &[f64],
    levels: &[usize],
    check_first: bool,
) -> Result<(), NumericError> {
    for &level in levels {
        if level >= eigenvalues.len() {
            continue;
        }
        let v = matrix.eigenvector(eigenvalues[level]);
        let max = v.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
        let mut boundary = v[v.len() - 1].abs();
        if check_first {
            boundary = boundary.max(v[0].abs());
        }
        if boundary > 1e-5 * max {
            return Err(NumericError::DomainTruncation {
                boundary_amplitude: boundary / max,
            });
        }
    }
    Ok(())
}

fn build_report(
    per_grid: Vec<(usize, Vec<f64>)>,
    matrix_finest: &SymTridiagonal,
    n_levels: usize,
    order: f64,
) -> Result<EigenReport, NumericError> {
    let grid_sizes: Vec<usize> = per_grid.iter().map(|(n, _)| *n).collect();
    let finest = &per_grid.last().unwrap().1;
    let eigenvalues: Vec<f64> = finest.iter().take(n_levels).copied().collect();

    let mut extrapolated = Vec::with_capacity(eigenvalues.len());
    let mut error_estimate = Vec::with_capacity(eigenvalues.len());
    let mut apparent_order = None;
    let mut order_warnings = 0;
    for (k, &ev) in eigenvalues.iter().enumerate() {
        if per_grid.len() >= 2 {
            let levels: Vec<(usize, f64)> =
                per_grid.iter().map(|(n, vals)| (*n, vals[k])).collect();
            let Extrapolation {
                value,
                error_estimate: est,
                apparent_order: order_fit,
                order_warning,
            } = richardson(&levels, order)?;
            extrapolated.push(value);
            error_estimate.push(est);
            if k == 0 {
                apparent_order = order_fit;
            }
            if order_warning {
                order_warnings += 1;
            }
        } else {
            extrapolated.push(ev);
            error_estimate.push(0.0);
        }
    }

    let residual_norms = eigenvalues
        .iter()
        .map(|&lam| {
            let v = matrix_finest.eigenvector(lam);
            let hv = matrix_finest.apply(&v);
            hv.iter()
                .zip(&v)
                .map(|(&a, &x)| (a - lam * x) * (a - lam * x))
                .sum::<f64>()
                .sqrt()
        })
        .collect();

    Ok(EigenReport {
        grid_sizes,
        eigenvalues,
        extrapolated,
        error_estimate,
        residual_norms,
        apparent_order,
        order_warnings,
    })
}

/// 1D oscillator spectrum: lowest `n_levels` eigenvalues across
/// `grid_sizes` (two or three doubling sizes extrapolate; one size reports
/// raw values).
pub fn spectrum_1d(
    params: &DeformationParams,
    n_levels: usize,
    grid_sizes: &[usize],
    disc: Discretization1D,
) -> Result<EigenReport, NumericError> {
    assert!(!grid_sizes.is_empty());
    let mut per_grid = Vec::with_capacity(grid_sizes.len());
    let mut finest_matrix = None;
    for &n_g in grid_sizes {
        let grid = grid_1d(params, n_g, disc, n_levels)?;
        let matrix = hamiltonian_1d(&grid)?;
        let values = matrix.eigenvalues()?;
        per_grid.push((n_g, values));
        finest_matrix = Some((grid, matrix));
    }
    let (grid, matrix) = finest_matrix.unwrap();
    // Dirichlet truncation only matters for the momentum-line grid.
    if matches!(grid.kind, super::grid::GridKind::TruncatedP { .. }) {
        let eigenvalues = &per_grid.last().unwrap().1;
        check_boundary_decay(&matrix, eigenvalues, &[0, n_levels.saturating_sub(1)], true)?;
    }
    build_report(per_grid, &matrix, n_levels, 2.0)
}

/// Radial spectrum at angular quantum number `s`: lowest `m_levels` radial
/// eigenvalues.
pub fn spectrum_radial(
    params: &DeformationParams,
    s: u32,
    m_levels: usize,
    grid_sizes: &[usize],
    p_max: Option<f64>,
) -> Result<EigenReport, NumericError> {
    assert!(!grid_sizes.is_empty());
    let extent = p_max.unwrap_or_else(|| default_p_max(params, (s + 2 * m_levels as u32) + 1));
    let mut per_grid = Vec::with_capacity(grid_sizes.len());
    let mut finest_matrix = None;
    for &n_g in grid_sizes {
        let grid = MomentumGrid::radial_p(params, n_g, extent)?;
        let matrix = hamiltonian_radial(&grid, s, true)?;
        let values = matrix.eigenvalues()?;
        per_grid.push((n_g, values));
        finest_matrix = Some(matrix);
    }
    let matrix = finest_matrix.unwrap();
    let eigenvalues = &per_grid.last().unwrap().1;
    check_boundary_decay(
        &matrix,
        eigenvalues,
        &[0, m_levels.saturating_sub(1)],
        false,
    )?;
    build_report(per_grid, &matrix, m_levels, 2.0)
}

/// Deduplicated eigenvalues of the discretized position operator: the
/// position lattice. Clustered means of the doubled embedding spectrum,
/// sorted ascending.
pub fn position_lattice(params: &DeformationParams, n_g: usize) -> Result<Vec<f64>, NumericError> {
    let matrix = position_matrix_1d(params, n_g)?;
    let solve = eig_sym(&matrix)?;
    let spacing = 2.0 * params.hbar() * params.delta();
    let mut lattice = Vec::new();
    let mut cluster: Vec<f64> = Vec::new();
    for &v in &solve.values {
        match cluster.last() {
            Some(&prev) if (v - prev).abs() > 0.5 * spacing => {
                lattice.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
                cluster.clear();
                cluster.push(v);
            }
            _ => cluster.push(v),
        }
    }
    if !cluster.is_empty() {
        lattice.push(cluster.iter().sum::<f64>() / cluster.len() as f64);
    }
    Ok(lattice)
}
