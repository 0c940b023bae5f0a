//! Latent embeddings of both tables and the embedding-level metrics (linear
//! CKA and the average per-dimension Wasserstein distance).
//!
//! Numeric features are z-scored with the real means and standard
//! deviations; categorical features are replaced by their real-data category
//! frequency (unseen categories map to 0). A single PCA is fitted on the real
//! block and applied to both, and every projected row is scaled to unit
//! length.

use std::collections::HashMap;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::distribution::wasserstein_1d;
use crate::error::MetricError;
use crate::ingest::{AlignedPair, Cell, FeatureKind};

/// Relative eigenvalue cut-off below which a principal direction counts as
/// numerically absent.
const RANK_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct EmbeddingPair {
    /// Row-normalized real embedding, `n × k`.
    pub z_real: DMatrix<f64>,
    /// Row-normalized synthetic embedding, `m × k`.
    pub z_synth: DMatrix<f64>,
    pub k: usize,
    /// Principal directions fitted on the real block, `d × k`.
    pub pca_basis: DMatrix<f64>,
    pub explained_variance: Vec<f64>,
    /// Preprocessed features that entered the PCA, in column order.
    pub features: Vec<String>,
    /// PCA scores before row normalization (used for plots).
    pub scores_real: DMatrix<f64>,
    pub scores_synth: DMatrix<f64>,
    /// Rows whose projection was exactly zero and were left unnormalized.
    pub zero_rows_real: usize,
    pub zero_rows_synth: usize,
    pub notes: Vec<String>,
}

enum Encoder {
    Standardize { mean: f64, std: f64 },
    Frequency(HashMap<String, f64>),
}

impl Encoder {
    fn encode(&self, cell: &Cell) -> f64 {
        match self {
            Encoder::Standardize { mean, std } => match cell.as_number() {
                Some(v) => (v - mean) / std,
                None => 0.0,
            },
            Encoder::Frequency(freq) => cell
                .label()
                .and_then(|l| freq.get(&l).copied())
                .unwrap_or(0.0),
        }
    }
}

fn sample_std(values: &[f64]) -> Option<(f64, f64)> {
    if values.len() < 2 {
        return None;
    }
    let mean = values.iter().sum::<f64>() / values.len() as f64;
    let var =
        values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (values.len() - 1) as f64;
    Some((mean, var.sqrt()))
}

/// Builds the embedding pair for an aligned pair of tables.
pub fn build_embeddings(pair: &AlignedPair, pca_dims: usize) -> Result<EmbeddingPair, MetricError> {
    let mut notes = Vec::new();
    let mut encoders: Vec<(String, Encoder)> = Vec::new();

    for info in &pair.schema.features {
        let Some(col) = pair.real.column(&info.name) else {
            continue;
        };
        match info.kind {
            FeatureKind::Continuous | FeatureKind::Ordinal => match sample_std(&col.numbers()) {
                Some((mean, std)) if std > 0.0 => {
                    encoders.push((info.name.clone(), Encoder::Standardize { mean, std }))
                }
                _ => notes.push(format!(
                    "feature `{}` has zero variance and was left out of the embedding",
                    info.name
                )),
            },
            FeatureKind::BinaryCategorical | FeatureKind::MultiCategorical => {
                let labels = col.labels();
                let mut freq: HashMap<String, f64> = HashMap::new();
                for l in &labels {
                    *freq.entry(l.clone()).or_default() += 1.0;
                }
                if freq.len() < 2 {
                    notes.push(format!(
                        "feature `{}` has a single category and was left out of the embedding",
                        info.name
                    ));
                    continue;
                }
                let n = labels.len() as f64;
                freq.values_mut().for_each(|v| *v /= n);
                encoders.push((info.name.clone(), Encoder::Frequency(freq)));
            }
            FeatureKind::Text => {}
        }
    }
    if encoders.is_empty() {
        return Err(MetricError::NoUsableFeatures);
    }

    let encode = |table: &crate::ingest::DataTable| -> DMatrix<f64> {
        let n = table.n_rows();
        let d = encoders.len();
        let mut m = DMatrix::zeros(n, d);
        for (j, (name, enc)) in encoders.iter().enumerate() {
            if let Some(col) = table.column(name) {
                for (i, cell) in col.values.iter().enumerate() {
                    m[(i, j)] = enc.encode(cell);
                }
            }
        }
        m
    };
    let x = encode(&pair.real);
    let y = encode(&pair.synthetic);
    let n = x.nrows();
    if n < 2 {
        return Err(MetricError::NoUsableFeatures);
    }

    let means = x.row_mean();
    let center = |m: &DMatrix<f64>| {
        let mut c = m.clone();
        for mut row in c.row_iter_mut() {
            row -= &means;
        }
        c
    };
    let xc = center(&x);
    let yc = center(&y);
    let cov = xc.transpose() * &xc / (n - 1) as f64;

    let eig = SymmetricEigen::new(cov);
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]).then(a.cmp(&b)));
    let lambda_max = eig.eigenvalues[order[0]].max(0.0);
    let rank = order
        .iter()
        .filter(|&&i| eig.eigenvalues[i] > RANK_TOL * lambda_max && eig.eigenvalues[i] > 0.0)
        .count();
    if rank == 0 {
        return Err(MetricError::NoUsableFeatures);
    }
    let k = pca_dims.min(rank);

    let d = encoders.len();
    let mut basis = DMatrix::zeros(d, k);
    for (c, &idx) in order.iter().take(k).enumerate() {
        let v = eig.eigenvectors.column(idx);
        // Fix the sign: the largest-magnitude component (first on ties) is positive.
        let mut pivot = 0;
        for i in 1..d {
            if v[i].abs() > v[pivot].abs() {
                pivot = i;
            }
        }
        let sign = if v[pivot] < 0.0 { -1.0 } else { 1.0 };
        for i in 0..d {
            basis[(i, c)] = sign * v[i];
        }
    }
    let explained_variance = order.iter().take(k).map(|&i| eig.eigenvalues[i]).collect();

    let scores_real = &xc * &basis;
    let scores_synth = &yc * &basis;
    let (z_real, zero_rows_real) = normalize_rows(&scores_real);
    let (z_synth, zero_rows_synth) = normalize_rows(&scores_synth);
    if zero_rows_real + zero_rows_synth > 0 {
        notes.push(format!(
            "{zero_rows_real} real and {zero_rows_synth} synthetic rows embedded at the origin and left unnormalized"
        ));
    }

    Ok(EmbeddingPair {
        z_real,
        z_synth,
        k,
        pca_basis: basis,
        explained_variance,
        features: encoders.into_iter().map(|(n, _)| n).collect(),
        scores_real,
        scores_synth,
        zero_rows_real,
        zero_rows_synth,
        notes,
    })
}

/// Scales each row to unit Euclidean norm; all-zero rows stay zero and are counted.
pub fn normalize_rows(m: &DMatrix<f64>) -> (DMatrix<f64>, usize) {
    let mut out = m.clone();
    let mut zero = 0;
    for mut row in out.row_iter_mut() {
        let norm = row.norm();
        if norm > 0.0 {
            row /= norm;
        } else {
            zero += 1;
        }
    }
    (out, zero)
}

/// Linear CKA `‖Z_Xᵀ Z_Y‖_F² / (‖Z_Xᵀ Z_X‖_F ‖Z_Yᵀ Z_Y‖_F)`, in `[0, 1]`.
///
/// The cross product pairs rows by index, so both embeddings need the same
/// number of rows; callers with unequal tables subsample first (see
/// [`crate::graph::paired_subsample`]).
pub fn cka(z_real: &DMatrix<f64>, z_synth: &DMatrix<f64>) -> Result<f64, MetricError> {
    if z_real.shape() != z_synth.shape() {
        return Err(MetricError::ShapeMismatch(format!(
            "embeddings {:?} and {:?}",
            z_real.shape(),
            z_synth.shape()
        )));
    }
    let xx = (z_real.transpose() * z_real).norm();
    let yy = (z_synth.transpose() * z_synth).norm();
    if xx == 0.0 || yy == 0.0 {
        return Err(MetricError::ZeroEmbedding);
    }
    let xy = (z_real.transpose() * z_synth).norm_squared();
    Ok((xy / (xx * yy)).clamp(0.0, 1.0))
}

/// Mean over embedding dimensions of the 1-D Wasserstein distance.
pub fn awed(z_real: &DMatrix<f64>, z_synth: &DMatrix<f64>) -> Result<f64, MetricError> {
    if z_real.ncols() != z_synth.ncols() {
        return Err(MetricError::ShapeMismatch(format!(
            "embedding widths {} and {}",
            z_real.ncols(),
            z_synth.ncols()
        )));
    }
    let k = z_real.ncols();
    if k == 0 {
        return Err(MetricError::EmptySample);
    }
    let mut total = 0.0;
    for j in 0..k {
        let a: Vec<f64> = z_real.column(j).iter().copied().collect();
        let b: Vec<f64> = z_synth.column(j).iter().copied().collect();
        total += wasserstein_1d(&a, &b)?;
    }
    Ok(total / k as f64)
}
