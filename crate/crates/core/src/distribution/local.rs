use std::collections::HashSet;

use super::coverage::{category_coverage, chi_square, cramers_v, range_coverage};
use super::divergence::{hellinger, js_divergence, kl_divergence, total_variation};
use super::ecdf::{ks_statistic, wasserstein_1d};
use super::pmf::PmfPair;
use crate::error::MetricError;
use crate::ingest::{Column, FeatureKind};

/// Which metric family a feature received.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricFamily {
    Numeric,
    Categorical,
}

/// Per-feature metrics; `None` marks a metric that does not apply to the
/// feature's kind.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalMetrics {
    pub family: MetricFamily,
    pub ks: Option<f64>,
    pub jsd: Option<f64>,
    pub kld: Option<f64>,
    pub wd: Option<f64>,
    pub hd: Option<f64>,
    pub tvd: Option<f64>,
    pub rc: Option<f64>,
    pub css: Option<f64>,
    pub cv: Option<f64>,
    pub cc: Option<f64>,
}

impl LocalMetrics {
    pub fn empty(family: MetricFamily) -> Self {
        LocalMetrics {
            family,
            ks: None,
            jsd: None,
            kld: None,
            wd: None,
            hd: None,
            tvd: None,
            rc: None,
            css: None,
            cv: None,
            cc: None,
        }
    }

    /// Applies `f` to every present value.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> Self {
        let g = |v: Option<f64>| v.map(&f);
        LocalMetrics {
            family: self.family,
            ks: g(self.ks),
            jsd: g(self.jsd),
            kld: g(self.kld),
            wd: g(self.wd),
            hd: g(self.hd),
            tvd: g(self.tvd),
            rc: g(self.rc),
            css: g(self.css),
            cv: g(self.cv),
            cc: g(self.cc),
        }
    }
}

/// Metrics for one feature plus the PMFs they were computed on.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureEvaluation {
    pub metrics: LocalMetrics,
    pub pmf: PmfPair,
    pub notes: Vec<String>,
}

/// Numeric metric set: KS, WD and RC on raw values; JSD, KLD, HD and TVD on
/// `bins` shared equal-width bins.
pub fn numeric_metrics(x: &[f64], y: &[f64], bins: usize) -> Result<FeatureEvaluation, MetricError> {
    let pmf = PmfPair::binned(x, y, bins)?;
    let metrics = LocalMetrics {
        ks: Some(ks_statistic(x, y)?),
        jsd: Some(js_divergence(&pmf)),
        kld: Some(kl_divergence(&pmf)),
        wd: Some(wasserstein_1d(x, y)?),
        hd: Some(hellinger(&pmf)),
        tvd: Some(total_variation(&pmf)),
        rc: Some(range_coverage(x, y)?),
        ..LocalMetrics::empty(MetricFamily::Numeric)
    };
    Ok(FeatureEvaluation {
        metrics,
        pmf,
        notes: Vec::new(),
    })
}

/// Categorical metric set over category labels.
pub fn categorical_metrics(x: &[String], y: &[String]) -> Result<FeatureEvaluation, MetricError> {
    let pmf = PmfPair::categorical(x, y)?;
    let chi = chi_square(&pmf)?;
    let mut notes = Vec::new();
    if !chi.excluded.is_empty() {
        let names: Vec<&str> = chi.excluded.iter().map(|&i| pmf.support[i].as_str()).collect();
        notes.push(format!(
            "categories absent from real data excluded from chi-square: {}",
            names.join(", ")
        ));
    }
    let real_set: HashSet<&String> = x.iter().collect();
    let synth_set: HashSet<&String> = y.iter().collect();
    let metrics = LocalMetrics {
        jsd: Some(js_divergence(&pmf)),
        kld: Some(kl_divergence(&pmf)),
        hd: Some(hellinger(&pmf)),
        tvd: Some(total_variation(&pmf)),
        css: Some(chi.statistic),
        cv: cramers_v(chi.statistic, x.len(), chi.categories_used),
        cc: Some(category_coverage(&real_set, &synth_set)),
        ..LocalMetrics::empty(MetricFamily::Categorical)
    };
    Ok(FeatureEvaluation {
        metrics,
        pmf,
        notes,
    })
}

/// Evaluates one aligned feature; missing cells are dropped on each side.
/// Returns `Ok(None)` for text features, which are not scored.
pub fn evaluate_feature(
    real: &Column,
    synth: &Column,
    kind: FeatureKind,
    bins: usize,
) -> Result<Option<FeatureEvaluation>, MetricError> {
    match kind {
        FeatureKind::Continuous | FeatureKind::Ordinal => {
            numeric_metrics(&real.numbers(), &synth.numbers(), bins).map(Some)
        }
        FeatureKind::BinaryCategorical | FeatureKind::MultiCategorical => {
            categorical_metrics(&real.labels(), &synth.labels()).map(Some)
        }
        FeatureKind::Text => Ok(None),
    }
}
