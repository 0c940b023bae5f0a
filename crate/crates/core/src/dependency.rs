//! Multivariate dependency-preservation metrics: covariance and correlation
//! matrix distances, correlation differences and mutual-information difference.
//!
//! Matrices are built over the numeric (continuous and ordinal) features with
//! pairwise-complete observations; covariances use the `n - 1` denominator
//! and Spearman ranks average over ties. Mutual information is the plug-in
//! estimate over joint category counts of the categorical features.

use std::collections::BTreeMap;

use nalgebra::DMatrix;

use crate::error::MetricError;
use crate::ingest::{AlignedPair, Cell, DataTable};
use crate::stats::average_ranks;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationKind {
    Pearson,
    Spearman,
}

/// Covariance and correlation matrices of both tables.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixStats {
    pub feature_order: Vec<String>,
    pub cov_real: DMatrix<f64>,
    pub cov_synth: DMatrix<f64>,
    pub pearson_real: DMatrix<f64>,
    pub pearson_synth: DMatrix<f64>,
    pub spearman_real: DMatrix<f64>,
    pub spearman_synth: DMatrix<f64>,
}

/// Covariance and correlation matrices of one table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableMatrices {
    pub cov: DMatrix<f64>,
    pub pearson: DMatrix<f64>,
    pub spearman: DMatrix<f64>,
}

fn numeric_columns(table: &DataTable, names: &[&str]) -> Vec<Vec<Option<f64>>> {
    names
        .iter()
        .map(|n| {
            table
                .column(n)
                .map(|c| c.values.iter().map(Cell::as_number).collect())
                .unwrap_or_default()
        })
        .collect()
}

fn pearson_of(a: &[f64], b: &[f64]) -> (f64, f64) {
    let n = a.len();
    if n < 2 {
        return (0.0, 0.0);
    }
    let ma = a.iter().sum::<f64>() / n as f64;
    let mb = b.iter().sum::<f64>() / n as f64;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        let (dx, dy) = (x - ma, y - mb);
        sab += dx * dy;
        saa += dx * dx;
        sbb += dy * dy;
    }
    let cov = sab / (n - 1) as f64;
    let corr = if saa > 0.0 && sbb > 0.0 {
        (sab / (saa.sqrt() * sbb.sqrt())).clamp(-1.0, 1.0)
    } else {
        0.0
    };
    (cov, corr)
}

/// Builds the three `d × d` matrices of one table over `names`.
pub fn table_matrices(table: &DataTable, names: &[&str]) -> TableMatrices {
    let cols = numeric_columns(table, names);
    let d = cols.len();
    let complete: Vec<bool> = cols.iter().map(|c| c.iter().all(Option::is_some)).collect();
    let dense: Vec<Vec<f64>> = cols.iter().map(|c| c.iter().flatten().copied().collect()).collect();
    let full_ranks: Vec<Vec<f64>> = dense.iter().map(|c| average_ranks(c)).collect();

    let mut cov = DMatrix::zeros(d, d);
    let mut pearson = DMatrix::identity(d, d);
    let mut spearman = DMatrix::identity(d, d);
    for i in 0..d {
        for j in i..d {
            let (c, p, s) = if complete[i] && complete[j] {
                let (c, p) = pearson_of(&dense[i], &dense[j]);
                let (_, s) = pearson_of(&full_ranks[i], &full_ranks[j]);
                (c, p, s)
            } else {
                let (a, b): (Vec<f64>, Vec<f64>) = cols[i]
                    .iter()
                    .zip(&cols[j])
                    .filter_map(|(x, y)| Some(((*x)?, (*y)?)))
                    .unzip();
                let (c, p) = pearson_of(&a, &b);
                let (_, s) = pearson_of(&average_ranks(&a), &average_ranks(&b));
                (c, p, s)
            };
            cov[(i, j)] = c;
            cov[(j, i)] = c;
            if i != j {
                pearson[(i, j)] = p;
                pearson[(j, i)] = p;
                spearman[(i, j)] = s;
                spearman[(j, i)] = s;
            }
        }
    }
    TableMatrices {
        cov,
        pearson,
        spearman,
    }
}

impl MatrixStats {
    /// Matrices over the numeric features of an aligned pair; `None` when the
    /// pair has no numeric feature.
    pub fn compute(pair: &AlignedPair) -> Option<MatrixStats> {
        let names: Vec<&str> = pair.schema.numeric().map(|f| f.name.as_str()).collect();
        if names.is_empty() {
            return None;
        }
        let real = table_matrices(&pair.real, &names);
        let synth = table_matrices(&pair.synthetic, &names);
        Some(MatrixStats {
            feature_order: names.iter().map(|s| s.to_string()).collect(),
            cov_real: real.cov,
            cov_synth: synth.cov,
            pearson_real: real.pearson,
            pearson_synth: synth.pearson,
            spearman_real: real.spearman,
            spearman_synth: synth.spearman,
        })
    }

    /// Symmetry, unit diagonals and `[-1, 1]` bounds of all four correlation
    /// matrices, plus covariance symmetry.
    pub fn check_invariants(&self) -> Result<(), MetricError> {
        let fail = |what: &str| Err(MetricError::Invariant(format!("matrix invariant violated: {what}")));
        for (name, m) in [
            ("pearson_real", &self.pearson_real),
            ("pearson_synth", &self.pearson_synth),
            ("spearman_real", &self.spearman_real),
            ("spearman_synth", &self.spearman_synth),
        ] {
            if !is_symmetric(m, 1e-10) {
                return fail(&format!("{name} not symmetric"));
            }
            if m.diagonal().iter().any(|&v| v != 1.0) {
                return fail(&format!("{name} diagonal not 1"));
            }
            if m.iter().any(|v| !(-1.0..=1.0).contains(v)) {
                return fail(&format!("{name} entry outside [-1, 1]"));
            }
        }
        for (name, m) in [("cov_real", &self.cov_real), ("cov_synth", &self.cov_synth)] {
            if !is_symmetric(m, 1e-10) {
                return fail(&format!("{name} not symmetric"));
            }
        }
        Ok(())
    }

    /// Smallest covariance eigenvalue of each side, for the PSD diagnostic.
    pub fn min_cov_eigenvalues(&self) -> (f64, f64) {
        let min = |m: &DMatrix<f64>| {
            m.clone()
                .symmetric_eigenvalues()
                .iter()
                .copied()
                .fold(f64::INFINITY, f64::min)
        };
        (min(&self.cov_real), min(&self.cov_synth))
    }
}

fn is_symmetric(m: &DMatrix<f64>, tol: f64) -> bool {
    let d = m.nrows();
    m.ncols() == d && (0..d).all(|i| (0..i).all(|j| (m[(i, j)] - m[(j, i)]).abs() <= tol))
}

fn check_shape(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<(), MetricError> {
    if a.shape() != b.shape() {
        return Err(MetricError::ShapeMismatch(format!(
            "{:?} vs {:?}",
            a.shape(),
            b.shape()
        )));
    }
    Ok(())
}

/// `‖Σ_X − Σ_Y‖_F`.
pub fn cov_frobenius(cov_real: &DMatrix<f64>, cov_synth: &DMatrix<f64>) -> Result<f64, MetricError> {
    check_shape(cov_real, cov_synth)?;
    Ok((cov_real - cov_synth).norm())
}

/// `‖R_X − R_Y‖_F / ‖R_X‖_F`.
pub fn corr_matrix_distance(
    corr_real: &DMatrix<f64>,
    corr_synth: &DMatrix<f64>,
) -> Result<f64, MetricError> {
    check_shape(corr_real, corr_synth)?;
    let denom = corr_real.norm();
    if denom == 0.0 {
        return Err(MetricError::Invariant("zero correlation matrix".into()));
    }
    Ok((corr_real - corr_synth).norm() / denom)
}

/// Mean of `|ρ_X,ij − ρ_Y,ij|` over the strict upper triangle; `None` for
/// fewer than two features.
pub fn mean_upper_abs_diff(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Option<f64> {
    let d = a.nrows();
    if d < 2 || a.shape() != b.shape() {
        return None;
    }
    let mut sum = 0.0;
    let mut count = 0usize;
    for i in 0..d {
        for j in (i + 1)..d {
            sum += (a[(i, j)] - b[(i, j)]).abs();
            count += 1;
        }
    }
    Some(sum / count as f64)
}

pub fn correlation_difference(kind: CorrelationKind, stats: &MatrixStats) -> Option<f64> {
    match kind {
        CorrelationKind::Pearson => mean_upper_abs_diff(&stats.pearson_real, &stats.pearson_synth),
        CorrelationKind::Spearman => {
            mean_upper_abs_diff(&stats.spearman_real, &stats.spearman_synth)
        }
    }
}

/// Plug-in entropy (nats) of a label sample.
pub fn entropy(labels: &[&str]) -> f64 {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for l in labels {
        *counts.entry(l).or_default() += 1;
    }
    let n = labels.len() as f64;
    counts
        .values()
        .map(|&c| {
            let p = c as f64 / n;
            -p * p.ln()
        })
        .sum()
}

/// Plug-in mutual information (nats) between two paired label samples:
/// `Σ p(a,b) ln(p(a,b) / (p(a) p(b)))`.
pub fn mutual_information(a: &[&str], b: &[&str]) -> f64 {
    assert_eq!(a.len(), b.len(), "paired samples must have equal length");
    let n = a.len();
    if n == 0 {
        return 0.0;
    }
    let mut joint: BTreeMap<(&str, &str), usize> = BTreeMap::new();
    let mut ma: BTreeMap<&str, usize> = BTreeMap::new();
    let mut mb: BTreeMap<&str, usize> = BTreeMap::new();
    for (&x, &y) in a.iter().zip(b) {
        *joint.entry((x, y)).or_default() += 1;
        *ma.entry(x).or_default() += 1;
        *mb.entry(y).or_default() += 1;
    }
    let nf = n as f64;
    let mi: f64 = joint
        .iter()
        .map(|(&(x, y), &c)| {
            let pxy = c as f64 / nf;
            let px = ma[x] as f64 / nf;
            let py = mb[y] as f64 / nf;
            pxy * (pxy / (px * py)).ln()
        })
        .sum();
    mi.max(0.0)
}

/// Mutual-information matrices over the categorical features of both tables.
#[derive(Debug, Clone, PartialEq)]
pub struct MiMatrices {
    pub feature_order: Vec<String>,
    pub mi_real: DMatrix<f64>,
    pub mi_synth: DMatrix<f64>,
}

fn mi_matrix(table: &DataTable, names: &[&str]) -> DMatrix<f64> {
    let cols: Vec<Vec<Option<String>>> = names
        .iter()
        .map(|n| {
            table
                .column(n)
                .map(|c| c.values.iter().map(Cell::label).collect())
                .unwrap_or_default()
        })
        .collect();
    let d = cols.len();
    let mut m = DMatrix::zeros(d, d);
    for i in 0..d {
        for j in i..d {
            let (a, b): (Vec<&str>, Vec<&str>) = cols[i]
                .iter()
                .zip(&cols[j])
                .filter_map(|(x, y)| Some((x.as_deref()?, y.as_deref()?)))
                .unzip();
            let v = if i == j {
                entropy(&a)
            } else {
                mutual_information(&a, &b)
            };
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

impl MiMatrices {
    pub fn compute(pair: &AlignedPair) -> MiMatrices {
        let names: Vec<&str> = pair.schema.categorical().map(|f| f.name.as_str()).collect();
        MiMatrices {
            feature_order: names.iter().map(|s| s.to_string()).collect(),
            mi_real: mi_matrix(&pair.real, &names),
            mi_synth: mi_matrix(&pair.synthetic, &names),
        }
    }
}

/// Mean `|I_X(i,j) − I_Y(i,j)|` over categorical pairs `i < j`; `None` with
/// fewer than two categorical features.
pub fn mutual_information_difference(pair: &AlignedPair) -> Option<f64> {
    let mi = MiMatrices::compute(pair);
    mean_upper_abs_diff(&mi.mi_real, &mi.mi_synth)
}

/// The five dependency scalars of a run.
#[derive(Debug, Clone, PartialEq)]
pub struct DependencyMetrics {
    pub cms: Option<f64>,
    pub cmd: Option<f64>,
    pub cdp: Option<f64>,
    pub cds: Option<f64>,
    pub mid: Option<f64>,
    pub stats: Option<MatrixStats>,
}

/// Computes all dependency metrics of an aligned pair.
pub fn dependency_metrics(pair: &AlignedPair) -> Result<DependencyMetrics, MetricError> {
    let stats = MatrixStats::compute(pair);
    let (cms, cmd, cdp, cds) = match &stats {
        Some(s) => {
            s.check_invariants()?;
            let (min_real, min_synth) = s.min_cov_eigenvalues();
            let tol = -1e-8 * s.cov_real.trace().abs().max(1.0);
            if min_real < tol || min_synth < tol {
                log::warn!(
                    "covariance matrix not positive semidefinite (min eigenvalues {min_real:e}, {min_synth:e}); missing values make pairwise estimates inconsistent"
                );
            }
            (
                Some(cov_frobenius(&s.cov_real, &s.cov_synth)?),
                Some(corr_matrix_distance(&s.pearson_real, &s.pearson_synth)?),
                correlation_difference(CorrelationKind::Pearson, s),
                correlation_difference(CorrelationKind::Spearman, s),
            )
        }
        None => (None, None, None, None),
    };
    Ok(DependencyMetrics {
        cms,
        cmd,
        cdp,
        cds,
        mid: mutual_information_difference(pair),
        stats,
    })
}
