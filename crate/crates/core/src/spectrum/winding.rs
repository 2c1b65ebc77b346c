use std::f64::consts::PI;

use num_complex::Complex64;

use super::SpectrumError;

const ZERO_RATIO: f64 = 1e-8;
const ROUNDING_GUARD: f64 = 0.05;

/// Accumulated angle of a closed sampled loop in `ℂ`, in turns, before
/// rounding. The loop is closed from the last sample back to the first, so
/// the result is an integer up to floating-point drift.
pub fn winding_estimate(samples: &[Complex64]) -> Result<f64, SpectrumError> {
    let max = samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let min = samples.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
    if samples.is_empty() || !(min > ZERO_RATIO * max) {
        let ratio = if max > 0.0 { min / max } else { 0.0 };
        return Err(SpectrumError::EigenfunctionNotResolved { ratio });
    }
    let n = samples.len();
    let total: f64 = (0..n).map(|j| (samples[(j + 1) % n] / samples[j]).arg()).sum();
    Ok(total / (2.0 * PI))
}

/// Winding number of a nowhere-vanishing loop sampled on a uniform grid.
pub fn winding(samples: &[Complex64]) -> Result<i64, SpectrumError> {
    let turns = winding_estimate(samples)?;
    let rounded = turns.round();
    if (turns - rounded).abs() > ROUNDING_GUARD {
        return Err(SpectrumError::GridTooCoarse(turns));
    }
    Ok(rounded as i64)
}
