//! Plot-ready JSON files written under `plots_dir/<run_id>/`, plus a
//! `manifest.json` listing them. External renderers read only these files.

use std::fs;
use std::path::{Path, PathBuf};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::json::write_atomic;
use crate::dependency::MatrixStats;
use crate::distribution::PmfPair;
use crate::embedding::EmbeddingPair;
use crate::error::ReportError;
use crate::graph::KnnGraphPair;
use crate::run_id::RunId;

/// Most raw values kept per side for density plots.
pub const SAMPLE_CAP: usize = 5000;
pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    pub name: String,
    pub bin_edges: Vec<f64>,
    pub real_counts: Vec<usize>,
    pub synthetic_counts: Vec<usize>,
    pub real_sample: Vec<f64>,
    pub synthetic_sample: Vec<f64>,
}

impl Histogram {
    pub fn new(name: &str, pmf: &PmfPair, real: &[f64], synth: &[f64]) -> Self {
        Histogram {
            name: name.to_string(),
            bin_edges: pmf.bin_edges.clone().unwrap_or_default(),
            real_counts: pmf.counts_real.clone(),
            synthetic_counts: pmf.counts_synth.clone(),
            real_sample: strided(real, SAMPLE_CAP),
            synthetic_sample: strided(synth, SAMPLE_CAP),
        }
    }
}

/// Every `ceil(len / cap)`-th value.
fn strided(values: &[f64], cap: usize) -> Vec<f64> {
    let step = values.len().div_ceil(cap).max(1);
    values.iter().step_by(step).copied().collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoricalBars {
    pub name: String,
    pub categories: Vec<String>,
    pub real_counts: Vec<usize>,
    pub synthetic_counts: Vec<usize>,
}

impl CategoricalBars {
    pub fn new(name: &str, pmf: &PmfPair) -> Self {
        CategoricalBars {
            name: name.to_string(),
            categories: pmf.support.clone(),
            real_counts: pmf.counts_real.clone(),
            synthetic_counts: pmf.counts_synth.clone(),
        }
    }
}

fn rows_of(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrMatrices {
    pub features: Vec<String>,
    pub pearson_real: Vec<Vec<f64>>,
    pub pearson_synthetic: Vec<Vec<f64>>,
    pub spearman_real: Vec<Vec<f64>>,
    pub spearman_synthetic: Vec<Vec<f64>>,
}

impl From<&MatrixStats> for CorrMatrices {
    fn from(s: &MatrixStats) -> Self {
        CorrMatrices {
            features: s.feature_order.clone(),
            pearson_real: rows_of(&s.pearson_real),
            pearson_synthetic: rows_of(&s.pearson_synth),
            spearman_real: rows_of(&s.spearman_real),
            spearman_synthetic: rows_of(&s.spearman_synth),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Real,
    Synthetic,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcaPoint {
    pub pc1: f64,
    pub pc2: f64,
    pub source: Source,
}

/// First two PCA coordinates of a score row (0 when `k == 1`).
fn plane(scores: &DMatrix<f64>, row: usize) -> [f64; 2] {
    let at = |c: usize| if c < scores.ncols() { scores[(row, c)] } else { 0.0 };
    [at(0), at(1)]
}

fn pca_side(scores: &DMatrix<f64>, source: Source) -> impl Iterator<Item = PcaPoint> + '_ {
    (0..scores.nrows()).map(move |i| {
        let [pc1, pc2] = plane(scores, i);
        PcaPoint { pc1, pc2, source }
    })
}

pub fn pca_points(emb: &EmbeddingPair) -> Vec<PcaPoint> {
    pca_side(&emb.scores_real, Source::Real)
        .chain(pca_side(&emb.scores_synth, Source::Synthetic))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSide {
    pub coords: Vec<[f64; 2]>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KnnGraphSidecar {
    pub real: GraphSide,
    pub synthetic: GraphSide,
}

impl KnnGraphSidecar {
    pub fn new(graphs: &KnnGraphPair, emb: &EmbeddingPair) -> Self {
        let side = |g: &crate::graph::KnnGraph, rows: &[usize], scores: &DMatrix<f64>| GraphSide {
            coords: rows.iter().map(|&r| plane(scores, r)).collect(),
            edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        KnnGraphSidecar {
            real: side(&graphs.real, &graphs.rows_real, &emb.scores_real),
            synthetic: side(&graphs.synth, &graphs.rows_synth, &emb.scores_synth),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub kind: String,
    /// File name relative to the run directory.
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub run_id: String,
    pub sidecars: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn read(run_dir: &Path) -> Result<Self, ReportError> {
        let path = run_dir.join(MANIFEST_FILE);
        let text = fs::read_to_string(&path).map_err(|source| ReportError::Io { path, source })?;
        Ok(serde_json::from_str(&text)?)
    }
}

/// Everything a run can hand to the plot renderer. Empty parts are not written.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Sidecars {
    pub histograms: Vec<Histogram>,
    pub categorical_bars: Vec<CategoricalBars>,
    pub corr_matrices: Option<CorrMatrices>,
    pub embedding_pca: Option<Vec<PcaPoint>>,
    pub knn_graph: Option<KnnGraphSidecar>,
}

impl Sidecars {
    /// Writes the files and the manifest; returns the run directory.
    pub fn write(&self, plots_dir: &Path, run_id: &RunId) -> Result<PathBuf, ReportError> {
        let dir = plots_dir.join(run_id.as_str());
        let mut entries = Vec::new();
        let mut put = |kind: &str, json: String| -> Result<(), ReportError> {
            let file = format!("{kind}.json");
            write_atomic(&dir.join(&file), json.as_bytes())?;
            entries.push(ManifestEntry {
                kind: kind.to_string(),
                path: file,
            });
            Ok(())
        };
        if !self.histograms.is_empty() {
            put("histograms", serde_json::to_string(&self.histograms)?)?;
        }
        if !self.categorical_bars.is_empty() {
            put("categorical_bars", serde_json::to_string(&self.categorical_bars)?)?;
        }
        if let Some(c) = &self.corr_matrices {
            put("corr_matrices", serde_json::to_string(c)?)?;
        }
        if let Some(p) = &self.embedding_pca {
            put("embedding_pca", serde_json::to_string(p)?)?;
        }
        if let Some(g) = &self.knn_graph {
            put("knn_graph", serde_json::to_string(g)?)?;
        }
        let manifest = Manifest {
            run_id: run_id.to_string(),
            sidecars: entries,
        };
        write_atomic(
            &dir.join(MANIFEST_FILE),
            serde_json::to_string_pretty(&manifest)?.as_bytes(),
        )?;
        Ok(dir)
    }
}
