//! Physical parameters and derived deformation scales.
//!
//! Everything downstream is controlled by two derived quantities:
//! `delta_sq = ℓ/(m·ħ·c)` (inverse momentum squared) and the dimensionless
//! oscillator deformation `eps = ω·ℓ/(2c)`. With the default natural units
//! ħ = m = ω = c = 1 both reduce to simple functions of ℓ.

use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum ParamsError {
    /// A field violated its positivity/sign constraint.
    InvalidField { field: &'static str, value: f64 },
    /// Unsupported space-time dimension.
    InvalidDimension(usize),
    /// Config file line could not be parsed.
    BadConfigLine { line_no: usize, content: String },
    /// Config key is not recognized.
    UnknownKey(String),
}

impl fmt::Display for ParamsError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamsError::InvalidField { field, value } => {
                write!(f, "parameter `{field}` out of range: {value}")
            }
            ParamsError::InvalidDimension(n) => {
                write!(f, "space-time dimension must be 1..=4, got {n}")
            }
            ParamsError::BadConfigLine { line_no, content } => {
                write!(f, "config line {line_no} is not `key = value`: {content:?}")
            }
            ParamsError::UnknownKey(k) => write!(f, "unknown config key `{k}`"),
        }
    }
}

impl std::error::Error for ParamsError {}

/// Physical constants of the deformed theory.
///
/// `kappa` is the free real coefficient of the `iħκp_μ` term in the position
/// operators; it trades operator form against the weight of the inner
/// product and drops out of every spectrum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParams {
    hbar: f64,
    mass: f64,
    omega: f64,
    ell: f64,
    c: f64,
    kappa: f64,
    delta_sq_override: Option<f64>,
}

impl Default for DeformationParams {
    fn default() -> Self {
        Self::natural()
    }
}

impl DeformationParams {
    /// Natural units ħ = m = ω = c = 1 with the deformation switched off.
    pub fn natural() -> Self {
        DeformationParams {
            hbar: 1.0,
            mass: 1.0,
            omega: 1.0,
            ell: 0.0,
            c: 1.0,
            kappa: 0.0,
            delta_sq_override: None,
        }
    }

    pub fn new(
        hbar: f64,
        mass: f64,
        omega: f64,
        ell: f64,
        c: f64,
        kappa: f64,
    ) -> Result<Self, ParamsError> {
        let check = |field: &'static str, v: f64, strict: bool| {
            let ok = v.is_finite() && if strict { v > 0.0 } else { v >= 0.0 };
            if ok {
                Ok(())
            } else {
                Err(ParamsError::InvalidField { field, value: v })
            }
        };
        check("hbar", hbar, true)?;
        check("mass", mass, true)?;
        check("omega", omega, true)?;
        check("c", c, true)?;
        check("ell", ell, false)?;
        if !kappa.is_finite() {
            return Err(ParamsError::InvalidField {
                field: "kappa",
                value: kappa,
            });
        }
        Ok(DeformationParams {
            hbar,
            mass,
            omega,
            ell,
            c,
            kappa,
            delta_sq_override: None,
        })
    }

    /// Natural units with the fundamental length chosen so that
    /// `eps = ω·ℓ/(2c)` takes the requested value.
    pub fn with_eps(eps: f64) -> Result<Self, ParamsError> {
        let base = Self::natural();
        Self::new(
            base.hbar,
            base.mass,
            base.omega,
            2.0 * eps * base.c / base.omega,
            base.c,
            base.kappa,
        )
    }

    pub fn with_ell(mut self, ell: f64) -> Result<Self, ParamsError> {
        if !(ell.is_finite() && ell >= 0.0) {
            return Err(ParamsError::InvalidField {
                field: "ell",
                value: ell,
            });
        }
        self.ell = ell;
        Ok(self)
    }

    pub fn with_kappa(mut self, kappa: f64) -> Result<Self, ParamsError> {
        if !kappa.is_finite() {
            return Err(ParamsError::InvalidField {
                field: "kappa",
                value: kappa,
            });
        }
        self.kappa = kappa;
        Ok(self)
    }

    /// Force `delta_sq` to a given value instead of deriving it from ℓ.
    ///
    /// The free-particle convention uses `δ² = ℓ/(2mħc)`, half the canonical
    /// value; passing the halved value here reproduces those results without
    /// conflating the two conventions. Downstream quantities that involve ℓ
    /// only through δ² (every spectrum in this crate) stay self-consistent.
    pub fn with_delta_sq_override(mut self, delta_sq: f64) -> Result<Self, ParamsError> {
        if !(delta_sq.is_finite() && delta_sq >= 0.0) {
            return Err(ParamsError::InvalidField {
                field: "delta_sq_override",
                value: delta_sq,
            });
        }
        self.delta_sq_override = Some(delta_sq);
        Ok(self)
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }
    pub fn mass(&self) -> f64 {
        self.mass
    }
    pub fn omega(&self) -> f64 {
        self.omega
    }
    pub fn ell(&self) -> f64 {
        self.ell
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Deformation scale `δ² = ℓ/(m·ħ·c)`, or the explicit override.
    pub fn delta_sq(&self) -> f64 {
        self.delta_sq_override
            .unwrap_or(self.ell / (self.mass * self.hbar * self.c))
    }

    /// `δ = sqrt(δ²)`, the inverse momentum scale of the deformation.
    pub fn delta(&self) -> f64 {
        self.delta_sq().sqrt()
    }

    /// Dimensionless oscillator deformation `ε = ω·ℓ/(2c)`.
    ///
    /// Evaluated as `m·ħ·ω·δ²/2`, which is identical when δ² is derived from
    /// ℓ and keeps the oscillator formulas consistent when δ² is overridden.
    pub fn eps(&self) -> f64 {
        0.5 * self.mass * self.hbar * self.omega * self.delta_sq()
    }

    /// `(δ², ε)` as a pair.
    pub fn derive_scales(&self) -> (f64, f64) {
        (self.delta_sq(), self.eps())
    }

    /// Lower bound `|ħ/2 + ℓE/(2c)|` on the product Δp·Δq at energy `E`.
    pub fn uncertainty_bound(&self, energy: f64) -> f64 {
        (0.5 * self.hbar + 0.5 * self.ell * energy / self.c).abs()
    }

    /// Parse a flat `key = value` config file.
    ///
    /// Keys: `hbar`, `mass`, `omega`, `ell`, `c`, `kappa`,
    /// `delta_sq_override`. Blank lines and `#` comments are ignored.
    pub fn from_config_str(text: &str) -> Result<Self, ParamsError> {
        let mut map = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ParamsError::BadConfigLine {
                line_no: idx + 1,
                content: raw.to_string(),
            })?;
            let key = key.trim().to_string();
            let value: f64 = value
                .trim()
                .parse()
                .map_err(|_| ParamsError::BadConfigLine {
                    line_no: idx + 1,
                    content: raw.to_string(),
                })?;
            map.insert(key, value);
        }
        let mut params = Self::natural();
        let mut override_dsq = None;
        for (key, value) in map {
            match key.as_str() {
                "hbar" => params.hbar = value,
                "mass" => params.mass = value,
                "omega" => params.omega = value,
                "ell" => params.ell = value,
                "c" => params.c = value,
                "kappa" => params.kappa = value,
                "delta_sq_override" => override_dsq = Some(value),
                other => return Err(ParamsError::UnknownKey(other.to_string())),
            }
        }
        let mut validated = Self::new(
            params.hbar,
            params.mass,
            params.omega,
            params.ell,
            params.c,
            params.kappa,
        )?;
        if let Some(dsq) = override_dsq {
            validated = validated.with_delta_sq_override(dsq)?;
        }
        Ok(validated)
    }
}

/// Diagonal Minkowski signature truncated to `dim` axes.
///
/// The time-like `+1` entry is present only in the full four-dimensional
/// case; lower-dimensional signatures are purely spatial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpaceTimeSignature {
    dim: usize,
}

impl SpaceTimeSignature {
    pub fn new(dim: usize) -> Result<Self, ParamsError> {
        if (1..=4).contains(&dim) {
            Ok(SpaceTimeSignature { dim })
        } else {
            Err(ParamsError::InvalidDimension(dim))
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_time_axis(&self) -> bool {
        self.dim == 4
    }

    /// Metric sign of axis `i`: `+1` for the time axis, `-1` for space.
    pub fn metric_sign(&self, i: usize) -> i64 {
        assert!(i < self.dim, "axis {i} out of range for dim {}", self.dim);
        if self.has_time_axis() && i == 0 {
            1
        } else {
            -1
        }
    }

    /// `g_μν p_μ p_ν` for a vector with `dim` components.
    pub fn minkowski_sq(&self, p: &[f64]) -> f64 {
        assert_eq!(p.len(), self.dim);
        p.iter()
            .enumerate()
            .map(|(i, &pi)| self.metric_sign(i) as f64 * pi * pi)
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_scales_undeformed() {
        let p = DeformationParams::natural();
        assert_eq!(p.derive_scales(), (0.0, 0.0));
    }

    #[test]
    fn derive_scales_direct_arithmetic() {
        let p = DeformationParams::new(1.0, 1.0, 1.0, 0.2, 1.0, 0.0).unwrap();
        let (dsq, eps) = p.derive_scales();
        assert!((dsq - 0.2).abs() < 1e-15);
        assert!((eps - 0.1).abs() < 1e-15);

        let p = DeformationParams::new(1.0, 1.0, 2.0, 0.1, 1.0, 0.0).unwrap();
        let (dsq, eps) = p.derive_scales();
        assert!((dsq - 0.1).abs() < 1e-15);
        assert!((eps - 0.1).abs() < 1e-15);
    }

    #[test]
    fn derive_scales_monotone_in_ell() {
        let mut prev = (0.0, 0.0);
        for i in 1..=10 {
            let ell = 0.05 * i as f64;
            let p = DeformationParams::natural().with_ell(ell).unwrap();
            let cur = p.derive_scales();
            assert!(cur.0 > prev.0 && cur.1 > prev.1);
            prev = cur;
        }
    }

    #[test]
    fn uncertainty_bound_cases() {
        let p0 = DeformationParams::natural();
        assert_eq!(p0.uncertainty_bound(0.0), 0.5);
        let p = DeformationParams::natural().with_ell(1.0).unwrap();
        assert_eq!(p.uncertainty_bound(1.0), 1.0);
        assert_eq!(p.uncertainty_bound(-2.0), 0.5);
    }

    #[test]
    fn rejects_bad_fields() {
        assert!(DeformationParams::new(0.0, 1.0, 1.0, 0.0, 1.0, 0.0).is_err());
        assert!(DeformationParams::new(1.0, -1.0, 1.0, 0.0, 1.0, 0.0).is_err());
        assert!(DeformationParams::new(1.0, 1.0, 1.0, -0.1, 1.0, 0.0).is_err());
        assert!(DeformationParams::natural().with_kappa(f64::NAN).is_err());
    }

    #[test]
    fn delta_sq_override_behaviour() {
        let p = DeformationParams::natural()
            .with_ell(0.2)
            .unwrap()
            .with_delta_sq_override(0.1)
            .unwrap();
        assert_eq!(p.delta_sq(), 0.1);
        // eps follows the effective delta_sq so spectra stay consistent.
        assert!((p.eps() - 0.05).abs() < 1e-15);
    }

    #[test]
    fn config_roundtrip() {
        let text =
            "# comment\nhbar = 1.0\nmass=2.0\n omega = 3.0\nell = 0.5\nc = 1.0\nkappa = 0.25\n";
        let p = DeformationParams::from_config_str(text).unwrap();
        assert_eq!(p.mass(), 2.0);
        assert_eq!(p.omega(), 3.0);
        assert_eq!(p.ell(), 0.5);
        assert_eq!(p.kappa(), 0.25);
        assert!((p.delta_sq() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn config_accepts_delta_sq_override() {
        let p = DeformationParams::from_config_str("ell = 0.2\ndelta_sq_override = 0.1\n").unwrap();
        assert_eq!(p.delta_sq(), 0.1);
        assert_eq!(p.ell(), 0.2);
    }

    #[test]
    fn config_rejects_garbage() {
        assert!(DeformationParams::from_config_str("hbar 1.0").is_err());
        assert!(DeformationParams::from_config_str("mystery = 2").is_err());
        assert!(DeformationParams::from_config_str("hbar = zebra").is_err());
    }

    #[test]
    fn signature_metric() {
        let s4 = SpaceTimeSignature::new(4).unwrap();
        assert_eq!(s4.metric_sign(0), 1);
        assert_eq!(s4.metric_sign(1), -1);
        assert_eq!(s4.metric_sign(3), -1);
        let s1 = SpaceTimeSignature::new(1).unwrap();
        assert_eq!(s1.metric_sign(0), -1);
        assert!(SpaceTimeSignature::new(5).is_err());
        assert!(SpaceTimeSignature::new(0).is_err());
        assert_eq!(s4.minkowski_sq(&[2.0, 1.0, 1.0, 1.0]), 1.0);
    }
}
