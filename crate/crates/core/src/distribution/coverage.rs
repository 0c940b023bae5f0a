use std::collections::HashSet;
use std::hash::Hash;

use super::pmf::PmfPair;
use crate::error::MetricError;

/// Share of the real value range overlapped by the synthetic range.
///
/// A constant real feature scores 1 when the synthetic range contains the
/// constant and 0 otherwise.
pub fn range_coverage(x: &[f64], y: &[f64]) -> Result<f64, MetricError> {
    let (min_x, max_x) = min_max(x).ok_or(MetricError::EmptySample)?;
    let (min_y, max_y) = min_max(y).ok_or(MetricError::EmptySample)?;
    if max_x == min_x {
        return Ok(if min_y <= min_x && min_x <= max_y {
            1.0
        } else {
            0.0
        });
    }
    let overlap = (max_x.min(max_y) - min_x.max(min_y)).max(0.0);
    Ok((overlap / (max_x - min_x)).clamp(0.0, 1.0))
}

fn min_max(v: &[f64]) -> Option<(f64, f64)> {
    if v.is_empty() {
        return None;
    }
    Some(v.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
        (lo.min(x), hi.max(x))
    }))
}

/// `|C_real ∩ C_synth| / |C_real|`.
pub fn category_coverage<T: Eq + Hash>(real: &HashSet<T>, synth: &HashSet<T>) -> f64 {
    if real.is_empty() {
        return 0.0;
    }
    real.intersection(synth).count() as f64 / real.len() as f64
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChiSquare {
    pub statistic: f64,
    /// Categories with a positive expected count that entered the sum.
    pub categories_used: usize,
    /// Support entries skipped because their expected count was zero.
    pub excluded: Vec<usize>,
}

/// `Σ (O_i − E_i)² / E_i` over entries with `E_i > 0`.
pub fn chi_square_counts(expected: &[f64], observed: &[f64]) -> Result<ChiSquare, MetricError> {
    if expected.len() != observed.len() {
        return Err(MetricError::ShapeMismatch(format!(
            "{} expected vs {} observed counts",
            expected.len(),
            observed.len()
        )));
    }
    let mut statistic = 0.0;
    let mut used = 0;
    let mut excluded = Vec::new();
    for (i, (&e, &o)) in expected.iter().zip(observed).enumerate() {
        if e > 0.0 {
            statistic += (o - e).powi(2) / e;
            used += 1;
        } else {
            excluded.push(i);
        }
    }
    if used == 0 {
        return Err(MetricError::NoExpectedMass);
    }
    Ok(ChiSquare {
        statistic,
        categories_used: used,
        excluded,
    })
}

/// Chi-square of synthetic (observed) against real (expected) category
/// counts, with synthetic counts rescaled by `n / m` so both totals match.
pub fn chi_square(pair: &PmfPair) -> Result<ChiSquare, MetricError> {
    let n = pair.n_real();
    let m = pair.n_synth();
    if n == 0 || m == 0 {
        return Err(MetricError::EmptySample);
    }
    let expected: Vec<f64> = pair.counts_real.iter().map(|&c| c as f64).collect();
    let scale = n as f64 / m as f64;
    let observed: Vec<f64> = pair
        .counts_synth
        .iter()
        .map(|&c| if n == m { c as f64 } else { c as f64 * scale })
        .collect();
    chi_square_counts(&expected, &observed)
}

/// `√(χ² / (n (K − 1)))`; `None` when there is a single category.
pub fn cramers_v(chi2: f64, n: usize, k: usize) -> Option<f64> {
    if k < 2 || n == 0 {
        return None;
    }
    Some((chi2 / (n as f64 * (k - 1) as f64)).sqrt())
}
