//! Resolution of command-line flags and the optional config file into one
//! validated run configuration.

use clap::{Args, ValueEnum};
use dynquant::params::DeformationParams;
use std::path::PathBuf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Flags shared by every sweep-style command.
#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    /// Flat key=value parameter file (hbar, mass, omega, ell, c, kappa,
    /// delta_sq_override).
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Deformation sweep values ε = ωℓ/2c (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub epsilon: Option<Vec<f64>>,
    /// Gauge-parameter sweep, in multiples of δ² (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub kappa: Option<Vec<f64>>,
    /// Highest level: n for 1D, m′ for the radial command, max degree for
    /// verify-algebra.
    #[arg(long)]
    pub nmax: Option<u32>,
    /// Angular quantum numbers for the radial command (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub s: Option<Vec<u32>>,
    /// Grid sizes, powers of two in 64..=4096 (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub grids: Option<Vec<usize>>,
    /// Output path (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Seed for the counter-based test-function stream.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Override the command's default tolerance.
    #[arg(long)]
    pub tolerance: Option<f64>,
}

/// Fully resolved configuration for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub base: DeformationParams,
    pub epsilon: Vec<f64>,
    /// κ values as multiples of δ².
    pub kappa_ratios: Vec<f64>,
    pub n_max: u32,
    pub s_values: Vec<u32>,
    pub grids: Vec<usize>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub seed: u64,
    pub tolerance: f64,
}

pub struct Defaults {
    pub epsilon: &'static [f64],
    pub kappa_ratios: &'static [f64],
    pub n_max: u32,
    pub s_values: &'static [u32],
    pub grids: &'static [usize],
    pub tolerance: f64,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl RunConfig {
    pub fn resolve(args: &SweepArgs, defaults: &Defaults) -> Result<RunConfig, UsageError> {
        let base = match &args.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| UsageError(format!("cannot read {}: {e}", path.display())))?;
                DeformationParams::from_config_str(&text)
                    .map_err(|e| UsageError(format!("bad config file: {e}")))?
            }
            None => DeformationParams::natural(),
        };

        // the config file's ℓ and κ become single-element sweep defaults
        let epsilon = match &args.epsilon {
            Some(list) => list.clone(),
            None if base.ell() > 0.0 => vec![base.eps()],
            None => defaults.epsilon.to_vec(),
        };
        let kappa_ratios = match &args.kappa {
            Some(list) => list.clone(),
            None if base.kappa() != 0.0 && base.delta_sq() > 0.0 => {
                vec![base.kappa() / base.delta_sq()]
            }
            None => defaults.kappa_ratios.to_vec(),
        };
        let n_max = args.nmax.unwrap_or(defaults.n_max);
        let s_values = args.s.clone().unwrap_or_else(|| defaults.s_values.to_vec());
        let grids = args
            .grids
            .clone()
            .unwrap_or_else(|| defaults.grids.to_vec());
        let tolerance = args.tolerance.unwrap_or(defaults.tolerance);

        if epsilon.is_empty() || kappa_ratios.is_empty() || s_values.is_empty() || grids.is_empty()
        {
            return Err(UsageError("sweep lists must be non-empty".into()));
        }
        if epsilon.iter().any(|&e| !(e >= 0.0) || !e.is_finite()) {
            return Err(UsageError("epsilon values must be finite and ≥ 0".into()));
        }
        if kappa_ratios.iter().any(|k| !k.is_finite()) {
            return Err(UsageError("kappa values must be finite".into()));
        }
        if n_max > 64 {
            return Err(UsageError(format!("nmax must be ≤ 64, got {n_max}")));
        }
        for &g in &grids {
            if !(64..=4096).contains(&g) || !g.is_power_of_two() {
                return Err(UsageError(format!(
                    "grid sizes must be powers of two in 64..=4096, got {g}"
                )));
            }
        }
        if !(tolerance > 0.0) {
            return Err(UsageError(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }

        Ok(RunConfig {
            base,
            epsilon,
            kappa_ratios,
            n_max,
            s_values,
            grids,
            out: args.out.clone(),
            format: args.format,
            seed: args.seed.unwrap_or(2025),
            tolerance,
        })
    }

    /// Parameter set for one sweep point: ε fixes ℓ, the ratio fixes κ.
    pub fn params_at(&self, eps: f64, kappa_ratio: f64) -> DeformationParams {
        let base = self.base;
        let ell = 2.0 * eps * base.c() / base.omega();
        let params =
            DeformationParams::new(base.hbar(), base.mass(), base.omega(), ell, base.c(), 0.0)
                .expect("validated fields");
        let kappa = kappa_ratio * params.delta_sq();
        params.with_kappa(kappa).expect("finite kappa")
    }
}
