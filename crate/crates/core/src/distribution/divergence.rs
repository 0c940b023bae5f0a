//! Divergences between the two PMFs of a [`PmfPair`] (natural log throughout).

use std::f64::consts::LN_2;

use super::pmf::PmfPair;

/// Additive smoothing mass applied to `q` when it has a zero where `p` does not.
pub const KL_EPSILON: f64 = 1e-10;

/// `KL(P || Q) = Σ p_i ln(p_i / q_i)`.
///
/// When some `q_i = 0 < p_i` the whole of `Q` is smoothed to
/// `(q_i + ε) / (1 + Kε)`; otherwise `Q` is used as is, so `KL(P || P)` is
/// exactly zero.
pub fn kl_divergence(pair: &PmfPair) -> f64 {
    let k = pair.len() as f64;
    let needs_smoothing = pair
        .p
        .iter()
        .zip(&pair.q)
        .any(|(&p, &q)| p > 0.0 && q == 0.0);
    let kl: f64 = pair
        .p
        .iter()
        .zip(&pair.q)
        .filter(|(&p, _)| p > 0.0)
        .map(|(&p, &q)| {
            let q = if needs_smoothing {
                (q + KL_EPSILON) / (1.0 + k * KL_EPSILON)
            } else {
                q
            };
            p * (p / q).ln()
        })
        .sum();
    kl.max(0.0)
}

/// Jensen–Shannon divergence against the midpoint `M = (P + Q) / 2`; lies in `[0, ln 2]`.
pub fn js_divergence(pair: &PmfPair) -> f64 {
    let mut js = 0.0;
    for (&p, &q) in pair.p.iter().zip(&pair.q) {
        let m = 0.5 * (p + q);
        if p > 0.0 {
            js += 0.5 * p * (p / m).ln();
        }
        if q > 0.0 {
            js += 0.5 * q * (q / m).ln();
        }
    }
    js.clamp(0.0, LN_2)
}

/// `‖√p − √q‖₂ / √2`, in `[0, 1]`.
pub fn hellinger(pair: &PmfPair) -> f64 {
    let ss: f64 = pair
        .p
        .iter()
        .zip(&pair.q)
        .map(|(&p, &q)| (p.sqrt() - q.sqrt()).powi(2))
        .sum();
    (ss.sqrt() / std::f64::consts::SQRT_2).min(1.0)
}

/// `½ Σ |p_i − q_i|`, in `[0, 1]`.
pub fn total_variation(pair: &PmfPair) -> f64 {
    let s: f64 = pair.p.iter().zip(&pair.q).map(|(p, q)| (p - q).abs()).sum();
    (0.5 * s).min(1.0)
}
