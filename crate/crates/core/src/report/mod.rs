//! The JSON fidelity report and the plot sidecar files.

mod definitions;
mod json;
pub mod sidecars;

use std::collections::HashSet;

use chrono::NaiveDateTime;
use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::distribution::LocalMetrics;
use crate::error::ReportError;
use crate::ingest::{DroppedFeature, FeatureKind, FeatureSchema, QualityProfile};
use crate::run_id::RunId;
use crate::stats::round_to;

pub use definitions::METRIC_DEFINITIONS;
pub use json::{parse_report, to_json, write_atomic, write_report};

/// Decimals kept for metric values.
pub const METRIC_DECIMALS: i32 = 5;
/// Decimals kept for percentages.
pub const PERCENT_DECIMALS: i32 = 2;
pub const TIMESTAMP_FORMAT: &str = "%Y-%m-%dT%H:%M:%S%.6f";

pub const LOCAL_KEYS: [&str; 10] = [
    "KS_Statistic",
    "JS_Divergence",
    "KL_Divergence",
    "Wasserstein_Distance",
    "Hellinger_Distance",
    "Total_Variation_Distance",
    "Range_Coverage",
    "Chi_Square_Statistic",
    "Contingency_CramerV",
    "Category_Coverage",
];

pub const DEPENDENCY_KEYS: [&str; 5] = [
    "Covariance_Matrix_Similarity_Frobenius",
    "Correlation_Matrix_Distance",
    "Correlation_Difference_Pearson",
    "Correlation_Difference_Spearman",
    "Mutual_Information_Difference",
];

pub const STRUCTURAL_KEYS: [&str; 5] = [
    "CKA",
    "Neighborhood_Overlap",
    "Spectral_Distance",
    "Avg_Wasserstein_Embedding",
    "GSFS",
];

fn is_zero(v: &usize) -> bool {
    *v == 0
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Metadata {
    pub run_id: String,
    pub timestamp: String,
    pub real_dataset_path: String,
    pub synthetic_dataset_path: String,
    pub number_of_samples_real: usize,
    pub number_of_samples_synthetic: usize,
    pub total_features: usize,
    pub numerical_features: usize,
    pub binary_categorical_features: usize,
    pub multi_categorical_features: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub text_features: usize,
    pub total_missing_values: usize,
    #[serde(rename = "data_completeness (%)")]
    pub data_completeness_pct: f64,
    #[serde(rename = "outliers (%)")]
    pub outliers_pct: IndexMap<String, f64>,
    #[serde(default, skip_serializing_if = "IndexMap::is_empty")]
    pub missing_values_per_feature: IndexMap<String, usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dropped_features: Vec<DroppedFeature>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub synthetic_only: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structural_skipped: Option<String>,
}

/// The four-block report document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FidelityReport {
    pub metadata: Metadata,
    pub metric_definitions: IndexMap<String, String>,
    pub global_metrics: IndexMap<String, Option<f64>>,
    pub local_metrics: IndexMap<String, LocalMetrics>,
}

/// Embedding and graph scalars of a run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructuralGlobals {
    pub cka: f64,
    pub neighborhood_overlap: f64,
    pub spectral_distance: f64,
    pub avg_wasserstein_embedding: f64,
    pub gsfs: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct GlobalMetrics {
    pub cms: Option<f64>,
    pub cmd: Option<f64>,
    pub cdp: Option<f64>,
    pub cds: Option<f64>,
    pub mid: Option<f64>,
    /// `None` when the structural block was skipped.
    pub structural: Option<StructuralGlobals>,
}

impl GlobalMetrics {
    /// Named values in report order.
    pub fn entries(&self) -> Vec<(&'static str, Option<f64>)> {
        let mut out: Vec<(&'static str, Option<f64>)> = DEPENDENCY_KEYS
            .iter()
            .copied()
            .zip([self.cms, self.cmd, self.cdp, self.cds, self.mid])
            .collect();
        if let Some(s) = self.structural {
            out.extend(STRUCTURAL_KEYS.iter().copied().zip([
                Some(s.cka),
                Some(s.neighborhood_overlap),
                Some(s.spectral_distance),
                Some(s.avg_wasserstein_embedding),
                Some(s.gsfs),
            ]));
        }
        out
    }
}

/// Run facts that are not metrics.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct RunFacts {
    pub real_dataset_path: String,
    pub synthetic_dataset_path: String,
    pub number_of_samples_real: usize,
    pub number_of_samples_synthetic: usize,
    /// Schema of the aligned feature set.
    pub schema: FeatureSchema,
    pub dropped_features: Vec<DroppedFeature>,
    pub synthetic_only: Vec<String>,
    pub warnings: Vec<String>,
    pub structural_skipped: Option<String>,
}

/// Rounds to `decimals`, mapping non-finite values to `None`.
pub fn clean(value: Option<f64>, decimals: i32) -> Option<f64> {
    value.filter(|v| v.is_finite()).map(|v| round_to(v, decimals))
}

/// Builds the report; local features keep the order they are given in.
pub fn assemble(
    facts: RunFacts,
    quality: &QualityProfile,
    locals: Vec<(String, LocalMetrics)>,
    globals: &GlobalMetrics,
    run_id: &RunId,
    timestamp: NaiveDateTime,
) -> Result<FidelityReport, ReportError> {
    let mut seen = HashSet::new();
    let mut local_metrics = IndexMap::new();
    for (name, metrics) in locals {
        if !seen.insert(name.clone()) {
            return Err(ReportError::DuplicateFeature(name));
        }
        let rounded = metrics.filter_finite().map(|v| round_to(v, METRIC_DECIMALS));
        local_metrics.insert(name, rounded);
    }

    let schema = &facts.schema;
    let numerical = schema.count(FeatureKind::is_numeric);
    let binary = schema.count(|k| k == FeatureKind::BinaryCategorical);
    let multi = schema.count(|k| k == FeatureKind::MultiCategorical);
    let text = schema.count(|k| k == FeatureKind::Text);

    let missing_values_per_feature = if quality.total_missing > 0 {
        quality.missing_per_feature.clone()
    } else {
        IndexMap::new()
    };

    let metadata = Metadata {
        run_id: run_id.to_string(),
        timestamp: timestamp.format(TIMESTAMP_FORMAT).to_string(),
        real_dataset_path: facts.real_dataset_path,
        synthetic_dataset_path: facts.synthetic_dataset_path,
        number_of_samples_real: facts.number_of_samples_real,
        number_of_samples_synthetic: facts.number_of_samples_synthetic,
        total_features: numerical + binary + multi + text,
        numerical_features: numerical,
        binary_categorical_features: binary,
        multi_categorical_features: multi,
        text_features: text,
        total_missing_values: quality.total_missing,
        data_completeness_pct: round_to(quality.completeness_pct, PERCENT_DECIMALS),
        outliers_pct: quality
            .outlier_pct
            .iter()
            .map(|(k, v)| (k.clone(), round_to(*v, PERCENT_DECIMALS)))
            .collect(),
        missing_values_per_feature,
        dropped_features: facts.dropped_features,
        synthetic_only: facts.synthetic_only,
        warnings: facts.warnings,
        structural_skipped: facts.structural_skipped,
    };

    Ok(FidelityReport {
        metadata,
        metric_definitions: METRIC_DEFINITIONS
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect(),
        global_metrics: globals
            .entries()
            .into_iter()
            .map(|(k, v)| (k.to_string(), clean(v, METRIC_DECIMALS)))
            .collect(),
        local_metrics,
    })
}

impl LocalMetrics {
    /// Drops NaN and infinite values.
    pub fn filter_finite(&self) -> Self {
        let g = |v: Option<f64>| v.filter(|x| x.is_finite());
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
