//! Fidelity evaluation of a synthetic tabular dataset against the real table
//! it imitates.
//!
//! A run loads both CSV files, profiles the real data, aligns the shared
//! features, and scores the pair at three levels: per-feature distribution
//! distances, cross-feature dependency structure, and the geometry of a
//! joint low-dimensional embedding and its kNN graph. Results are written as
//! a JSON report plus plot-ready sidecar files.
//!
//! ```no_run
//! use synthfid::{run_pipeline, RunConfig};
//!
//! let cfg = RunConfig::new("real.csv", "synthetic.csv", "report.json", "plots");
//! let outcome = run_pipeline(&cfg).unwrap();
//! println!("{}", outcome.report().global_metrics.len());
//! ```

pub mod config;
pub mod dependency;
pub mod distribution;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod ingest;
pub mod pipeline;
pub mod report;
pub mod run_id;
pub mod stats;

pub use config::{parse_config, RunConfig};
pub use pipeline::{evaluate, run_pipeline, run_pipeline_at, Evaluation, RunOutcome};
pub use report::FidelityReport;
pub use error::{ConfigError, Error, IngestError, MetricError, ReportError, Result, SchemaError};
pub use run_id::RunId;
