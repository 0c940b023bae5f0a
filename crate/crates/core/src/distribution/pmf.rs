use std::collections::HashMap;

use crate::error::MetricError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PmfSource {
    BinnedNumeric,
    Categorical,
}

/// Real (`p`) and synthetic (`q`) probability vectors over a shared support.
#[derive(Debug, Clone, PartialEq)]
pub struct PmfPair {
    /// Category labels, or bin labels for numeric features.
    pub support: Vec<String>,
    /// `support.len() + 1` edges for binned numeric features.
    pub bin_edges: Option<Vec<f64>>,
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub counts_real: Vec<usize>,
    pub counts_synth: Vec<usize>,
    pub source: PmfSource,
}

impl PmfPair {
    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn n_real(&self) -> usize {
        self.counts_real.iter().sum()
    }

    pub fn n_synth(&self) -> usize {
        self.counts_synth.iter().sum()
    }

    /// Builds a pair straight from probability vectors (no counts attached).
    pub fn from_probabilities(p: Vec<f64>, q: Vec<f64>) -> Result<Self, MetricError> {
        if p.len() != q.len() {
            return Err(MetricError::ShapeMismatch(format!(
                "p has {} entries, q has {}",
                p.len(),
                q.len()
            )));
        }
        if p.is_empty() {
            return Err(MetricError::EmptySample);
        }
        Ok(PmfPair {
            support: (0..p.len()).map(|i| i.to_string()).collect(),
            bin_edges: None,
            counts_real: vec![0; p.len()],
            counts_synth: vec![0; p.len()],
            p,
            q,
            source: PmfSource::Categorical,
        })
    }

    /// Category PMFs over the union of both label sets, ordered by real
    /// frequency (descending) then lexicographically.
    pub fn categorical(real: &[String], synth: &[String]) -> Result<Self, MetricError> {
        if real.is_empty() || synth.is_empty() {
            return Err(MetricError::EmptySample);
        }
        let mut real_counts: HashMap<&str, usize> = HashMap::new();
        let mut synth_counts: HashMap<&str, usize> = HashMap::new();
        for l in real {
            *real_counts.entry(l).or_default() += 1;
        }
        for l in synth {
            *synth_counts.entry(l).or_default() += 1;
        }
        let mut support: Vec<&str> = real_counts
            .keys()
            .chain(synth_counts.keys().filter(|k| !real_counts.contains_key(*k)))
            .copied()
            .collect();
        support.sort_by(|a, b| {
            let ca = real_counts.get(a).copied().unwrap_or(0);
            let cb = real_counts.get(b).copied().unwrap_or(0);
            cb.cmp(&ca).then_with(|| a.cmp(b))
        });

        let counts_real: Vec<usize> = support
            .iter()
            .map(|c| real_counts.get(c).copied().unwrap_or(0))
            .collect();
        let counts_synth: Vec<usize> = support
            .iter()
            .map(|c| synth_counts.get(c).copied().unwrap_or(0))
            .collect();
        Ok(PmfPair {
            support: support.into_iter().map(str::to_string).collect(),
            bin_edges: None,
            p: normalize(&counts_real),
            q: normalize(&counts_synth),
            counts_real,
            counts_synth,
            source: PmfSource::Categorical,
        })
    }

    /// Histogram PMFs over `bins` equal-width bins spanning the pooled range;
    /// bins are half-open except the last, which includes the maximum.
    pub fn binned(real: &[f64], synth: &[f64], bins: usize) -> Result<Self, MetricError> {
        if real.is_empty() || synth.is_empty() {
            return Err(MetricError::EmptySample);
        }
        let bins = bins.max(1);
        let edges = shared_bin_edges(real, synth, bins);
        let counts_real = bin_counts(real, &edges);
        let counts_synth = bin_counts(synth, &edges);
        let support = edges
            .windows(2)
            .enumerate()
            .map(|(i, w)| {
                let close = if i + 1 == bins { ']' } else { ')' };
                format!("[{}, {}{close}", w[0], w[1])
            })
            .collect();
        Ok(PmfPair {
            support,
            p: normalize(&counts_real),
            q: normalize(&counts_synth),
            counts_real,
            counts_synth,
            bin_edges: Some(edges),
            source: PmfSource::BinnedNumeric,
        })
    }
}

fn normalize(counts: &[usize]) -> Vec<f64> {
    let total: usize = counts.iter().sum();
    counts
        .iter()
        .map(|&c| c as f64 / total as f64)
        .collect()
}

/// `bins + 1` equal-width edges over `[min(x ∪ y), max(x ∪ y)]`; the last edge
/// is exactly the pooled maximum.
pub fn shared_bin_edges(x: &[f64], y: &[f64], bins: usize) -> Vec<f64> {
    let (lo, hi) = x
        .iter()
        .chain(y)
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &v| {
            (lo.min(v), hi.max(v))
        });
    let width = (hi - lo) / bins as f64;
    let mut edges: Vec<f64> = (0..bins).map(|i| lo + i as f64 * width).collect();
    edges.push(hi);
    edges
}

/// Index of the bin holding `v`; values at or beyond the last edge land in
/// the last bin.
pub fn bin_index(v: f64, edges: &[f64]) -> usize {
    let bins = edges.len() - 1;
    if v >= edges[bins] {
        return bins - 1;
    }
    edges[1..bins].partition_point(|&e| e <= v)
}

pub fn bin_counts(values: &[f64], edges: &[f64]) -> Vec<usize> {
    let mut counts = vec![0; edges.len() - 1];
    for &v in values {
        counts[bin_index(v, edges)] += 1;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[&str]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn categorical_counts() {
        let pair = PmfPair::categorical(&s(&["a", "a", "b"]), &s(&["a", "b", "b"])).unwrap();
        assert_eq!(pair.support, vec!["a", "b"]);
        assert!((pair.p[0] - 2.0 / 3.0).abs() < 1e-15);
        assert!((pair.q[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn synthetic_only_category_gets_zero_real_mass() {
        let pair = PmfPair::categorical(&s(&["a", "b", "b"]), &s(&["a", "z"])).unwrap();
        assert_eq!(pair.support, vec!["b", "a", "z"]);
        assert_eq!(pair.p[2], 0.0);
        assert_eq!(pair.q[2], 0.5);
    }

    #[test]
    fn identical_numeric_gives_identical_pmfs() {
        let x = [0.1, 5.0, 2.2, 2.2, 9.9, 7.0];
        let pair = PmfPair::binned(&x, &x, 4).unwrap();
        assert_eq!(pair.p, pair.q);
        assert_eq!(pair.bin_edges.as_ref().unwrap().len(), 5);
        assert!((pair.p.iter().sum::<f64>() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn last_bin_includes_max() {
        let edges = shared_bin_edges(&[0.0, 10.0], &[5.0], 2);
        assert_eq!(edges, vec![0.0, 5.0, 10.0]);
        assert_eq!(bin_index(0.0, &edges), 0);
        assert_eq!(bin_index(5.0, &edges), 1);
        assert_eq!(bin_index(10.0, &edges), 1);
        assert_eq!(bin_index(4.999, &edges), 0);
    }

    #[test]
    fn constant_values_single_bin() {
        let pair = PmfPair::binned(&[3.0, 3.0], &[3.0], 5).unwrap();
        assert_eq!(pair.p, pair.q);
        assert_eq!(pair.p.iter().filter(|&&v| v > 0.0).count(), 1);
    }

    #[test]
    fn empty_sample_errors() {
        assert_eq!(
            PmfPair::binned(&[], &[1.0], 3).unwrap_err(),
            MetricError::EmptySample
        );
        assert_eq!(
            PmfPair::categorical(&s(&["a"]), &[]).unwrap_err(),
            MetricError::EmptySample
        );
    }
}
