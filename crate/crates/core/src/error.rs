use std::path::PathBuf;

use thiserror::Error;

/// Problems with the YAML run configuration.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid YAML configuration: {0}")]
    Yaml(#[from] serde_yaml::Error),

    #[error("missing mandatory configuration key `{0}`")]
    MissingKey(&'static str),

    #[error("invalid value for `{key}`: {reason}")]
    InvalidValue { key: &'static str, reason: String },

    #[error("dataset path for `{key}` does not exist or is unreadable: {path}")]
    UnreadablePath { key: &'static str, path: PathBuf },

    #[error("cannot read configuration file {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl ConfigError {
    /// Name of the offending key, when the error concerns a single key.
    pub fn key(&self) -> Option<&'static str> {
        match self {
            ConfigError::MissingKey(k) => Some(k),
            ConfigError::InvalidValue { key, .. } => Some(key),
            ConfigError::UnreadablePath { key, .. } => Some(key),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed CSV in {path}: {message}")]
    Csv { path: PathBuf, message: String },

    #[error("ragged row {row} in {path}: expected {expected} fields, found {found}")]
    Ragged {
        path: PathBuf,
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("{path} has no header row")]
    MissingHeader { path: PathBuf },

    #[error("{path} contains duplicate column name `{name}`")]
    DuplicateColumn { path: PathBuf, name: String },

    #[error("column `{name}` has {found} cells, expected {expected}")]
    ColumnLength {
        name: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("real and synthetic tables share no comparable features")]
    EmptyIntersection,
}

#[derive(Debug, Error, PartialEq)]
pub enum MetricError {
    #[error("empty sample")]
    EmptySample,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("no category has a positive expected count")]
    NoExpectedMass,

    #[error("embedding matrix is all zero")]
    ZeroEmbedding,

    #[error("no usable feature for the embedding")]
    NoUsableFeatures,

    #[error("{rows} rows is too few for a {needed}-node neighbor graph")]
    TooFewRows { rows: usize, needed: usize },

    #[error("{0}")]
    Invariant(String),
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("duplicate feature name `{0}` in local metrics")]
    DuplicateFeature(String),

    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

/// Any failure of an end-to-end evaluation run.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error(transparent)]
    Schema(#[from] SchemaError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Report(#[from] ReportError),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 1,
            Error::Ingest(_) | Error::Schema(_) => 2,
            Error::Metric(_) | Error::Report(_) => 3,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
