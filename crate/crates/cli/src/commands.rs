//! The six verification commands.

use crate::config::{Defaults, RunConfig, SweepArgs, UsageError};
use crate::output::{fmt_f64, fmt_grids, Table};
use crate::{EXIT_BREACH, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE};
use clap::Subcommand;
use dynquant::algebra::{
    commutator_table_with, position_operators_corrupted, rat, run_table, ExactParams,
};
use dynquant::analytic;
use dynquant::numeric::{self, Discretization1D};

#[derive(Debug, Subcommand)]
pub enum Command {
    /// 1D oscillator spectrum: numeric vs closed form over an ε/κ sweep.
    #[command(name = "spectrum1d")]
    Spectrum1d(SweepArgs),
    /// 3D isotropic oscillator radial spectrum over an ε/κ/s sweep.
    #[command(name = "spectrum3d")]
    Spectrum3d(SweepArgs),
    /// Discrete position lattice: spacing against the minimum length 2ħδ.
    #[command(name = "position")]
    Position(SweepArgs),
    /// Exact commutator-table verification on a graded polynomial basis.
    #[command(name = "verify-algebra")]
    VerifyAlgebra(AlgebraArgs),
    /// Symmetry of the position operator under the weighted inner product.
    #[command(name = "verify-hermiticity")]
    VerifyHermiticity(SweepArgs),
    /// Error-vs-grid-size table with fitted convergence order.
    #[command(name = "convergence")]
    Convergence(SweepArgs),
}

#[derive(Debug, clap::Args)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub sweep: SweepArgs,
    /// Flip the sign of the temporal operator's derivative term before
    /// verification (negative control: the table must fail).
    #[arg(long, hide = true)]
    pub corrupt_temporal_sign: bool,
}

pub fn dispatch(command: Command) -> i32 {
    let result = match command {
        Command::Spectrum1d(args) => spectrum_1d(&args),
        Command::Spectrum3d(args) => spectrum_3d(&args),
        Command::Position(args) => position(&args),
        Command::VerifyAlgebra(args) => verify_algebra(&args),
        Command::VerifyHermiticity(args) => verify_hermiticity(&args),
        Command::Convergence(args) => convergence(&args),
    };
    match result {
        Ok(code) => code,
        Err(CommandError::Usage(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
        Err(CommandError::Numeric(msg)) => {
            eprintln!("numeric failure: {msg}");
            EXIT_NUMERIC
        }
        Err(CommandError::Io(e)) => {
            eprintln!("i/o error: {e}");
            EXIT_NUMERIC
        }
    }
}

enum CommandError {
    Usage(UsageError),
    Numeric(String),
    Io(std::io::Error),
}

impl From<UsageError> for CommandError {
    fn from(e: UsageError) -> Self {
        CommandError::Usage(e)
    }
}

impl From<numeric::NumericError> for CommandError {
    fn from(e: numeric::NumericError) -> Self {
        CommandError::Numeric(e.to_string())
    }
}

impl From<std::io::Error> for CommandError {
    fn from(e: std::io::Error) -> Self {
        CommandError::Io(e)
    }
}

const SPECTRUM_COLUMNS: [&str; 10] = [
    "epsilon",
    "kappa",
    "s",
    "n",
    "E_numeric",
    "E_analytic",
    "rel_err",
    "error_estimate",
    "grid_sizes",
    "status",
];

fn spectrum_1d(args: &SweepArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.0, 0.01, 0.05, 0.1],
        kappa_ratios: &[0.0, 1.0],
        n_max: 10,
        s_values: &[0],
        grids: &[512, 1024, 2048],
        tolerance: 1e-6,
    };
    let config = RunConfig::resolve(args, &defaults)?;
    let mut table = Table::new(SPECTRUM_COLUMNS.to_vec());
    let mut breaches = 0usize;
    for &eps in &config.epsilon {
        for &ratio in &config.kappa_ratios {
            let params = config.params_at(eps, ratio);
            let report = numeric::spectrum_1d(
                &params,
                config.n_max as usize + 1,
                &config.grids,
                Discretization1D::Auto,
            )?;
            for n in 0..=config.n_max {
                let reference = analytic::energy_1d(n, &params);
                let value = report.extrapolated[n as usize];
                let rel = ((value - reference) / reference).abs();
                let breach = rel > config.tolerance;
                breaches += breach as usize;
                table.push(vec![
                    fmt_f64(eps),
                    fmt_f64(params.kappa()),
                    "0".into(),
                    n.to_string(),
                    fmt_f64(value),
                    fmt_f64(reference),
                    fmt_f64(rel),
                    fmt_f64(report.error_estimate[n as usize]),
                    fmt_grids(&config.grids),
                    if breach { "breach" } else { "ok" }.into(),
                ]);
            }
        }
    }
    table.write("spectrum1d", &config)?;
    Ok(if breaches == 0 { EXIT_OK } else { EXIT_BREACH })
}

fn spectrum_3d(args: &SweepArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.0, 0.1],
        kappa_ratios: &[0.0],
        n_max: 4, // highest radial quantum number m′
        s_values: &[0, 1, 2],
        grids: &[256, 512, 1024],
        tolerance: 1e-4,
    };
    let config = RunConfig::resolve(args, &defaults)?;
    let mut table = Table::new(SPECTRUM_COLUMNS.to_vec());
    let mut breaches = 0usize;
    for &eps in &config.epsilon {
        for &ratio in &config.kappa_ratios {
            let params = config.params_at(eps, ratio);
            for &s in &config.s_values {
                let report = numeric::spectrum_radial(
                    &params,
                    s,
                    config.n_max as usize + 1,
                    &config.grids,
                    None,
                )?;
                for m_prime in 0..=config.n_max {
                    let reference = analytic::energy_3d(s, m_prime, &params);
                    let value = report.extrapolated[m_prime as usize];
                    let rel = ((value - reference) / reference).abs();
                    let breach = rel > config.tolerance;
                    breaches += breach as usize;
                    table.push(vec![
                        fmt_f64(eps),
                        fmt_f64(params.kappa()),
                        s.to_string(),
                        (s + 2 * m_prime).to_string(),
                        fmt_f64(value),
                        fmt_f64(reference),
                        fmt_f64(rel),
                        fmt_f64(report.error_estimate[m_prime as usize]),
                        fmt_grids(&config.grids),
                        if breach { "breach" } else { "ok" }.into(),
                    ]);
                }
            }
        }
    }
    table.write("spectrum3d", &config)?;
    Ok(if breaches == 0 { EXIT_OK } else { EXIT_BREACH })
}

fn position(args: &SweepArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.125], // δ = 0.5 in natural units
        kappa_ratios: &[0.0],
        n_max: 10,
        s_values: &[0],
        grids: &[256],
        tolerance: 1e-8,
    };
    let config = RunConfig::resolve(args, &defaults)?;
    let mut table = Table::new(vec![
        "epsilon",
        "delta",
        "n",
        "lambda_numeric",
        "lambda_analytic",
        "abs_dev",
        "spacing_dev",
        "grid_sizes",
        "status",
    ]);
    let mut breaches = 0usize;
    let n_g = *config.grids.first().expect("validated non-empty");
    for &eps in &config.epsilon {
        if eps == 0.0 {
            return Err(CommandError::Usage(UsageError(
                "the position lattice needs ε > 0 (δ > 0)".into(),
            )));
        }
        let params = config.params_at(eps, 0.0);
        let lattice = numeric::position_lattice(&params, n_g)?;
        let spacing = analytic::minimum_length(&params);
        // center index: the eigenvalue nearest zero
        let center = lattice
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).unwrap())
            .map(|(i, _)| i)
            .unwrap_or(0);
        let half = (config.n_max as usize)
            .min(center)
            .min(lattice.len() - 1 - center);
        for offset in -(half as i64)..=(half as i64) {
            let idx = (center as i64 + offset) as usize;
            let numeric_value = lattice[idx];
            let reference = analytic::position_eigenvalue(offset, &params);
            let abs_dev = (numeric_value - reference).abs();
            let spacing_dev = if idx + 1 < lattice.len() {
                ((lattice[idx + 1] - lattice[idx]) - spacing).abs()
            } else {
                0.0
            };
            let breach = abs_dev > config.tolerance || spacing_dev > config.tolerance;
            breaches += breach as usize;
            table.push(vec![
                fmt_f64(eps),
                fmt_f64(params.delta()),
                offset.to_string(),
                fmt_f64(numeric_value),
                fmt_f64(reference),
                fmt_f64(abs_dev),
                fmt_f64(spacing_dev),
                n_g.to_string(),
                if breach { "breach" } else { "ok" }.into(),
            ]);
        }
    }
    table.write("position", &config)?;
    Ok(if breaches == 0 { EXIT_OK } else { EXIT_BREACH })
}

fn verify_algebra(args: &AlgebraArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.0],
        kappa_ratios: &[0.0],
        n_max: 6, // max monomial degree here
        s_values: &[0],
        grids: &[256],
        tolerance: 1.0, // unused: the checks are exact
    };
    let config = RunConfig::resolve(&args.sweep, &defaults)?;
    let max_degree = config.n_max;
    let mut table = Table::new(vec![
        "delta_sq",
        "kappa",
        "identity",
        "max_degree",
        "residual_count",
        "first_failing_monomial",
        "status",
    ]);
    let mut failures: Vec<String> = Vec::new();
    for dsq in [(0i64, 1i64), (1, 1), (1, 3)] {
        for kappa_multiple in [(0i64, 1i64), (1, 1), (5, 2)] {
            let kappa = (dsq.0 * kappa_multiple.0, dsq.1 * kappa_multiple.1);
            let params = ExactParams::unit_hbar(dsq, kappa);
            let position_ops = if args.corrupt_temporal_sign {
                Some(position_operators_corrupted(&params))
            } else {
                None
            };
            let results = run_table(commutator_table_with(&params, position_ops), max_degree);
            for (name, report) in results {
                if !report.holds() {
                    failures.push(name.clone());
                }
                table.push(vec![
                    format!("{}", rat(dsq.0, dsq.1)),
                    format!("{}", rat(kappa.0, kappa.1)),
                    format!("\"{name}\""),
                    max_degree.to_string(),
                    report.residual_count.to_string(),
                    report
                        .first_failing_monomial
                        .clone()
                        .unwrap_or_else(|| "-".into()),
                    if report.holds() { "ok" } else { "breach" }.into(),
                ]);
            }
        }
    }
    table.write("verify-algebra", &config)?;
    if failures.is_empty() {
        Ok(EXIT_OK)
    } else {
        eprintln!(
            "{} identities failed; first: {}",
            failures.len(),
            failures[0]
        );
        Ok(EXIT_BREACH)
    }
}

fn verify_hermiticity(args: &SweepArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.125], // δ = 0.5
        kappa_ratios: &[0.0, 1.0, 2.5],
        n_max: 10,
        s_values: &[0],
        grids: &[256],
        tolerance: 1e-8,
    };
    let config = RunConfig::resolve(args, &defaults)?;
    const PAIRS: usize = 20;
    const CONTROL_FLOOR: f64 = 1e-3;
    let mut table = Table::new(vec![
        "epsilon", "kappa", "weight", "pair", "defect", "status",
    ]);
    let mut breaches = 0usize;
    for &eps in &config.epsilon {
        if eps == 0.0 {
            return Err(CommandError::Usage(UsageError(
                "the hermiticity sweep needs ε > 0 (δ > 0)".into(),
            )));
        }
        for &ratio in &config.kappa_ratios {
            let params = config.params_at(eps, ratio);
            let defects = analytic::hermiticity_defect_sweep(
                &params,
                config.seed,
                PAIRS,
                analytic::WeightMode::Deformed,
            );
            for (k, defect) in defects.iter().enumerate() {
                let breach = *defect >= config.tolerance;
                breaches += breach as usize;
                table.push(vec![
                    fmt_f64(eps),
                    fmt_f64(params.kappa()),
                    "deformed".into(),
                    k.to_string(),
                    fmt_f64(*defect),
                    if breach { "breach" } else { "ok" }.into(),
                ]);
            }
        }
        // negative control: flat measure must fail visibly
        let params = config.params_at(eps, 0.0);
        let control = analytic::hermiticity_defect_sweep(
            &params,
            config.seed,
            PAIRS,
            analytic::WeightMode::Flat,
        );
        for (k, defect) in control.iter().enumerate() {
            let breach = *defect <= CONTROL_FLOOR;
            breaches += breach as usize;
            table.push(vec![
                fmt_f64(eps),
                fmt_f64(0.0),
                "flat-control".into(),
                k.to_string(),
                fmt_f64(*defect),
                if breach { "breach" } else { "ok" }.into(),
            ]);
        }
    }
    table.write("verify-hermiticity", &config)?;
    Ok(if breaches == 0 { EXIT_OK } else { EXIT_BREACH })
}

fn convergence(args: &SweepArgs) -> Result<i32, CommandError> {
    let defaults = Defaults {
        epsilon: &[0.1],
        kappa_ratios: &[0.0],
        n_max: 4,
        s_values: &[0],
        grids: &[128, 256, 512, 1024],
        tolerance: 1e-6,
    };
    let config = RunConfig::resolve(args, &defaults)?;
    let mut table = Table::new(vec![
        "epsilon",
        "n",
        "grid",
        "E_numeric",
        "E_analytic",
        "abs_err",
        "order_fit",
    ]);
    for &eps in &config.epsilon {
        let params = config.params_at(eps, config.kappa_ratios[0]);
        // one single-grid report per size
        let mut per_grid: Vec<Vec<f64>> = Vec::new();
        for &g in &config.grids {
            let report = numeric::spectrum_1d(
                &params,
                config.n_max as usize + 1,
                &[g],
                Discretization1D::Auto,
            )?;
            per_grid.push(report.eigenvalues);
        }
        for n in 0..=config.n_max as usize {
            let reference = analytic::energy_1d(n as u32, &params);
            let mut prev_err: Option<f64> = None;
            for (gi, &g) in config.grids.iter().enumerate() {
                let value = per_grid[gi][n];
                let err = (value - reference).abs();
                let order = match prev_err {
                    Some(p) if err > 0.0 && config.grids[gi] == 2 * config.grids[gi - 1] => {
                        Some((p / err).log2())
                    }
                    _ => None,
                };
                prev_err = Some(err);
                table.push(vec![
                    fmt_f64(eps),
                    n.to_string(),
                    g.to_string(),
                    fmt_f64(value),
                    fmt_f64(reference),
                    fmt_f64(err),
                    order.map(fmt_f64).unwrap_or_else(|| "-".into()),
                ]);
            }
        }
    }
    table.write("convergence", &config)?;
    Ok(EXIT_OK)
}
