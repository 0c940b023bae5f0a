//! Univariate (per-feature) fidelity metrics.

mod coverage;
mod divergence;
mod ecdf;
mod local;
mod pmf;

pub use coverage::{
    category_coverage, chi_square, chi_square_counts, cramers_v, range_coverage, ChiSquare,
};
pub use divergence::{hellinger, js_divergence, kl_divergence, total_variation, KL_EPSILON};
pub use ecdf::{ks_statistic, wasserstein_1d, Ecdf};
pub use local::{
    categorical_metrics, evaluate_feature, numeric_metrics, FeatureEvaluation, LocalMetrics,
    MetricFamily,
};
pub use pmf::{bin_counts, bin_index, shared_bin_edges, PmfPair, PmfSource};
