//! YAML run configuration.
//!
//! Four keys are mandatory (`real_dataset_path`, `synthetic_dataset_path`,
//! `output_report`, `plots_dir`); every numeric knob has a default.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::ConfigError;

pub const DEFAULT_BINS: usize = 20;
pub const DEFAULT_KNN_K: usize = 10;
pub const DEFAULT_PCA_DIMS: usize = 8;
pub const DEFAULT_GRAPH_SAMPLE_CAP: usize = 2000;
pub const DEFAULT_CATEGORICAL_UNIQUE_MAX: usize = 15;
pub const DEFAULT_ORDINAL_UNIQUE_MAX: usize = 25;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub real_path: PathBuf,
    pub synthetic_path: PathBuf,
    pub report_path: PathBuf,
    pub plots_dir: PathBuf,
    /// Equal-width bins used for numeric PMFs.
    pub bins: usize,
    pub knn_k: usize,
    pub pca_dims: usize,
    /// Largest table (in rows) the embedding/graph block runs on unless forced.
    pub graph_sample_cap: usize,
    pub categorical_unique_max: usize,
    pub ordinal_unique_max: usize,
    pub seed: u64,
    pub enable_structural: bool,
    /// Subsample oversized tables down to `graph_sample_cap` instead of
    /// skipping the structural block.
    pub force_structural: bool,
}

impl RunConfig {
    /// A configuration with every optional knob at its default.
    pub fn new(
        real_path: impl Into<PathBuf>,
        synthetic_path: impl Into<PathBuf>,
        report_path: impl Into<PathBuf>,
        plots_dir: impl Into<PathBuf>,
    ) -> Self {
        RunConfig {
            real_path: real_path.into(),
            synthetic_path: synthetic_path.into(),
            report_path: report_path.into(),
            plots_dir: plots_dir.into(),
            bins: DEFAULT_BINS,
            knn_k: DEFAULT_KNN_K,
            pca_dims: DEFAULT_PCA_DIMS,
            graph_sample_cap: DEFAULT_GRAPH_SAMPLE_CAP,
            categorical_unique_max: DEFAULT_CATEGORICAL_UNIQUE_MAX,
            ordinal_unique_max: DEFAULT_ORDINAL_UNIQUE_MAX,
            seed: DEFAULT_SEED,
            enable_structural: true,
            force_structural: false,
        }
    }

    /// Reads and parses a configuration file.
    pub fn from_file(path: impl AsRef<Path>) -> Result<Self, ConfigError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        parse_config(&text)
    }

    /// Checks the knob invariants (`bins >= 2`, `graph_sample_cap > knn_k`, ...).
    pub fn validate(&self) -> Result<(), ConfigError> {
        fn invalid(key: &'static str, reason: impl Into<String>) -> ConfigError {
            ConfigError::InvalidValue {
                key,
                reason: reason.into(),
            }
        }
        if self.bins < 2 {
            return Err(invalid("bins", format!("must be >= 2, got {}", self.bins)));
        }
        if self.knn_k < 1 {
            return Err(invalid("knn_k", "must be >= 1"));
        }
        if self.pca_dims < 1 {
            return Err(invalid("pca_dims", "must be >= 1"));
        }
        if self.categorical_unique_max < 1 {
            return Err(invalid("categorical_unique_max", "must be >= 1"));
        }
        if self.ordinal_unique_max < 1 {
            return Err(invalid("ordinal_unique_max", "must be >= 1"));
        }
        if self.graph_sample_cap < self.knn_k + 1 {
            return Err(invalid(
                "graph_sample_cap",
                format!("must be >= knn_k + 1 = {}", self.knn_k + 1),
            ));
        }
        Ok(())
    }

    /// Checks that both dataset files can be opened.
    pub fn check_inputs(&self) -> Result<(), ConfigError> {
        for (key, path) in [
            ("real_dataset_path", &self.real_path),
            ("synthetic_dataset_path", &self.synthetic_path),
        ] {
            if std::fs::File::open(path).is_err() {
                return Err(ConfigError::UnreadablePath {
                    key,
                    path: path.clone(),
                });
            }
        }
        Ok(())
    }
}

#[derive(Debug, Deserialize)]
struct RawConfig {
    real_dataset_path: Option<PathBuf>,
    synthetic_dataset_path: Option<PathBuf>,
    output_report: Option<PathBuf>,
    plots_dir: Option<PathBuf>,
    bins: Option<i64>,
    knn_k: Option<i64>,
    pca_dims: Option<i64>,
    graph_sample_cap: Option<i64>,
    categorical_unique_max: Option<i64>,
    ordinal_unique_max: Option<i64>,
    seed: Option<u64>,
    enable_structural: Option<bool>,
    force_structural: Option<bool>,
}

fn positive(key: &'static str, value: Option<i64>, default: usize) -> Result<usize, ConfigError> {
    match value {
        None => Ok(default),
        Some(v) if v > 0 => Ok(v as usize),
        Some(v) => Err(ConfigError::InvalidValue {
            key,
            reason: format!("must be a positive integer, got {v}"),
        }),
    }
}

/// Parses YAML text into a validated [`RunConfig`], filling defaults for
/// absent optional keys. Dataset existence is checked separately by
/// [`RunConfig::check_inputs`].
pub fn parse_config(yaml_text: &str) -> Result<RunConfig, ConfigError> {
    let raw: RawConfig = serde_yaml::from_str(yaml_text)?;

    let real = raw
        .real_dataset_path
        .ok_or(ConfigError::MissingKey("real_dataset_path"))?;
    let synth = raw
        .synthetic_dataset_path
        .ok_or(ConfigError::MissingKey("synthetic_dataset_path"))?;
    let report = raw
        .output_report
        .ok_or(ConfigError::MissingKey("output_report"))?;
    let plots = raw.plots_dir.ok_or(ConfigError::MissingKey("plots_dir"))?;

    let mut cfg = RunConfig::new(real, synth, report, plots);
    cfg.bins = positive("bins", raw.bins, DEFAULT_BINS)?;
    cfg.knn_k = positive("knn_k", raw.knn_k, DEFAULT_KNN_K)?;
    cfg.pca_dims = positive("pca_dims", raw.pca_dims, DEFAULT_PCA_DIMS)?;
    cfg.graph_sample_cap = positive(
        "graph_sample_cap",
        raw.graph_sample_cap,
        DEFAULT_GRAPH_SAMPLE_CAP,
    )?;
    cfg.categorical_unique_max = positive(
        "categorical_unique_max",
        raw.categorical_unique_max,
        DEFAULT_CATEGORICAL_UNIQUE_MAX,
    )?;
    cfg.ordinal_unique_max = positive(
        "ordinal_unique_max",
        raw.ordinal_unique_max,
        DEFAULT_ORDINAL_UNIQUE_MAX,
    )?;
    cfg.seed = raw.seed.unwrap_or(DEFAULT_SEED);
    cfg.enable_structural = raw.enable_structural.unwrap_or(true);
    cfg.force_structural = raw.force_structural.unwrap_or(false);
    cfg.validate()?;
    Ok(cfg)
}
