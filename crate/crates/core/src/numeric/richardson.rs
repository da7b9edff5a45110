//! Richardson extrapolation over doubled grids.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum RichardsonError {
    WrongLevelCount(usize),
    NotDoubling { coarse: usize, fine: usize },
}

impl fmt::Display for RichardsonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RichardsonError::WrongLevelCount(n) => {
                write!(f, "need two or three grid levels, got {n}")
            }
            RichardsonError::NotDoubling { coarse, fine } => {
                write!(f, "grid sizes must double: {coarse} then {fine}")
            }
        }
    }
}

impl std::error::Error for RichardsonError {}

#[derive(Debug, Clone, Copy)]
pub struct Extrapolation {
    pub value: f64,
    /// Magnitude of the difference of the last two extrapolants (zero for
    /// two levels, where only one extrapolant exists).
    pub error_estimate: f64,
    /// Observed convergence order `log2(|v₁−v₀| / |v₂−v₁|)`; `None` with
    /// two levels or when the differences are at rounding level.
    pub apparent_order: Option<f64>,
    /// Set when the apparent order deviates from the nominal one by more
    /// than 30 %.
    pub order_warning: bool,
}

/// Eliminate the leading `h^order` error (and `h^{order+2}` with three
/// levels) from values computed at doubling grid sizes.
pub fn richardson(levels: &[(usize, f64)], order: f64) -> Result<Extrapolation, RichardsonError> {
    if levels.len() != 2 && levels.len() != 3 {
        return Err(RichardsonError::WrongLevelCount(levels.len()));
    }
    for pair in levels.windows(2) {
        if pair[1].0 != 2 * pair[0].0 {
            return Err(RichardsonError::NotDoubling {
                coarse: pair[0].0,
                fine: pair[1].0,
            });
        }
    }
    let r = 2f64.powf(order);
    let eliminate = |coarse: f64, fine: f64, ratio: f64| fine + (fine - coarse) / (ratio - 1.0);

    if levels.len() == 2 {
        let value = eliminate(levels[0].1, levels[1].1, r);
        return Ok(Extrapolation {
            value,
            error_estimate: (value - levels[1].1).abs(),
            apparent_order: None,
            order_warning: false,
        });
    }

    let (v0, v1, v2) = (levels[0].1, levels[1].1, levels[2].1);
    let first = eliminate(v0, v1, r);
    let second = eliminate(v1, v2, r);
    let r_next = 2f64.powf(order + 2.0);
    let value = eliminate(first, second, r_next);

    let d01 = (v1 - v0).abs();
    let d12 = (v2 - v1).abs();
    let scale = v2.abs().max(1.0);
    let apparent_order = if d12 > 1e3 * f64::EPSILON * scale && d01 > 0.0 {
        Some((d01 / d12).log2())
    } else {
        None
    };
    let order_warning = apparent_order
        .map(|p| (p - order).abs() > 0.3 * order)
        .unwrap_or(false);

    Ok(Extrapolation {
        value,
        error_estimate: (second - first).abs(),
        apparent_order,
        order_warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_quadratic_data_recovers_limit() {
        // v(h) = L + c·h², h ∝ 1/n
        let limit = 0.731;
        let c = 3.7;
        let levels: Vec<(usize, f64)> = [64usize, 128, 256]
            .iter()
            .map(|&n| (n, limit + c / (n * n) as f64))
            .collect();
        let ex = richardson(&levels, 2.0).unwrap();
        assert!((ex.value - limit).abs() < 1e-14);
        assert!((ex.apparent_order.unwrap() - 2.0).abs() < 1e-9);
        assert!(!ex.order_warning);
    }

    #[test]
    fn two_levels_single_elimination() {
        let levels = [(100usize, 1.04), (200, 1.01)];
        let ex = richardson(&levels, 2.0).unwrap();
        assert!((ex.value - 1.0).abs() < 1e-12);
        assert!(ex.apparent_order.is_none());
    }

    #[test]
    fn warns_on_wrong_order() {
        // data converging at first order while claiming second
        let limit = 2.0;
        let levels: Vec<(usize, f64)> = [64usize, 128, 256]
            .iter()
            .map(|&n| (n, limit + 1.0 / n as f64))
            .collect();
        let ex = richardson(&levels, 2.0).unwrap();
        assert!(ex.order_warning);
    }

    #[test]
    fn rejects_bad_level_sets() {
        assert!(richardson(&[(64, 1.0)], 2.0).is_err());
        assert!(richardson(&[(64, 1.0), (100, 1.0)], 2.0).is_err());
        assert!(richardson(&[(64, 1.0), (128, 1.0), (512, 1.0)], 2.0).is_err());
    }
}
