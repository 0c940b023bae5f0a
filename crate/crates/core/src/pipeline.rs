//! End-to-end evaluation: load, profile, align, score, report.

use std::path::{Path, PathBuf};

use chrono::NaiveDateTime;

use crate::config::RunConfig;
use crate::dependency::{dependency_metrics, DependencyMetrics};
use crate::distribution::{evaluate_feature, LocalMetrics};
use crate::embedding::{awed, build_embeddings, cka, EmbeddingPair};
use crate::error::{IngestError, Result};
use crate::graph::{build_knn_pair, paired_subsample, structural_metrics, KnnGraphPair};
use crate::ingest::{align, completeness, parse_csv, profile_outliers, AlignedPair, FeatureKind, TypeThresholds};
use crate::report::sidecars::{pca_points, CategoricalBars, CorrMatrices, Histogram, KnnGraphSidecar, Sidecars};
use crate::report::{assemble, write_report, FidelityReport, GlobalMetrics, RunFacts, StructuralGlobals};
use crate::run_id::RunId;

/// Everything computed by a run, before anything is written.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub run_id: RunId,
    pub report: FidelityReport,
    pub sidecars: Sidecars,
    /// Unrounded per-feature metrics, in report order.
    pub locals: Vec<(String, LocalMetrics)>,
    /// Unrounded global metrics.
    pub globals: GlobalMetrics,
    pub pair: AlignedPair,
    pub dependency: DependencyMetrics,
    pub embedding: Option<EmbeddingPair>,
    pub graphs: Option<KnnGraphPair>,
}

#[derive(Debug, Clone)]
pub struct RunOutcome {
    pub evaluation: Evaluation,
    pub report_path: PathBuf,
    /// `plots_dir/<run_id>`.
    pub sidecar_dir: PathBuf,
}

impl RunOutcome {
    pub fn report(&self) -> &FidelityReport {
        &self.evaluation.report
    }
}

fn read_bytes(path: &Path) -> Result<Vec<u8>, IngestError> {
    std::fs::read(path).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Runs the evaluation and writes the report and sidecars, stamping the
/// current local time.
pub fn run_pipeline(cfg: &RunConfig) -> Result<RunOutcome> {
    run_pipeline_at(cfg, chrono::Local::now().naive_local())
}

/// [`run_pipeline`] with a fixed timestamp.
pub fn run_pipeline_at(cfg: &RunConfig, timestamp: NaiveDateTime) -> Result<RunOutcome> {
    let evaluation = evaluate(cfg, timestamp)?;
    write_report(&evaluation.report, &cfg.report_path)?;
    let sidecar_dir = evaluation.sidecars.write(&cfg.plots_dir, &evaluation.run_id)?;
    log::info!(
        "run {} written to {}",
        evaluation.run_id,
        cfg.report_path.display()
    );
    Ok(RunOutcome {
        evaluation,
        report_path: cfg.report_path.clone(),
        sidecar_dir,
    })
}

/// Computes every metric of a run without touching the output paths.
pub fn evaluate(cfg: &RunConfig, timestamp: NaiveDateTime) -> Result<Evaluation> {
    cfg.validate()?;
    cfg.check_inputs()?;

    let real_bytes = read_bytes(&cfg.real_path)?;
    let synth_bytes = read_bytes(&cfg.synthetic_path)?;
    let real = parse_csv(&real_bytes, &cfg.real_path)?;
    let synth = parse_csv(&synth_bytes, &cfg.synthetic_path)?;
    let run_id = RunId::from_inputs(&real_bytes, &synth_bytes, cfg.seed);
    log::info!(
        "run {run_id}: {} real rows, {} synthetic rows",
        real.n_rows(),
        synth.n_rows()
    );

    let pair = align(&real, &synth, TypeThresholds::from(cfg))?;
    let mut warnings = Vec::new();
    for d in &pair.dropped_features {
        warnings.push(format!("feature `{}` dropped: {}", d.name, d.reason));
    }

    let mut quality = completeness(&real);
    quality.outlier_pct = profile_outliers(&pair.real, &pair.schema);

    let mut sidecars = Sidecars::default();
    let mut locals: Vec<(String, LocalMetrics)> = Vec::new();
    for info in &pair.schema.features {
        let (Some(rc), Some(sc)) = (pair.real.column(&info.name), pair.synthetic.column(&info.name))
        else {
            continue;
        };
        let Some(eval) = evaluate_feature(rc, sc, info.kind, cfg.bins)? else {
            warnings.push(format!("text feature `{}` is not scored", info.name));
            continue;
        };
        warnings.extend(eval.notes.iter().map(|n| format!("`{}`: {n}", info.name)));
        if info.kind == FeatureKind::Continuous || info.kind == FeatureKind::Ordinal {
            sidecars
                .histograms
                .push(Histogram::new(&info.name, &eval.pmf, &rc.numbers(), &sc.numbers()));
        } else {
            sidecars
                .categorical_bars
                .push(CategoricalBars::new(&info.name, &eval.pmf));
        }
        locals.push((info.name.clone(), eval.metrics));
    }

    let dependency = dependency_metrics(&pair)?;
    sidecars.corr_matrices = dependency.stats.as_ref().map(CorrMatrices::from);

    let mut globals = GlobalMetrics {
        cms: dependency.cms,
        cmd: dependency.cmd,
        cdp: dependency.cdp,
        cds: dependency.cds,
        mid: dependency.mid,
        structural: None,
    };

    let (n, m) = (pair.real.n_rows(), pair.synthetic.n_rows());
    let mut embedding = None;
    let mut graphs = None;
    let skip_reason = if !cfg.enable_structural {
        Some("disabled by configuration".to_string())
    } else if n.max(m) > cfg.graph_sample_cap && !cfg.force_structural {
        Some(format!(
            "{} rows exceed graph_sample_cap = {}",
            n.max(m),
            cfg.graph_sample_cap
        ))
    } else if n.min(m) < cfg.knn_k + 1 {
        Some(format!(
            "{} rows is too few for knn_k = {}",
            n.min(m),
            cfg.knn_k
        ))
    } else {
        None
    };

    if let Some(reason) = &skip_reason {
        log::warn!("structural metrics skipped: {reason}");
    } else {
        let emb = build_embeddings(&pair, cfg.pca_dims)?;
        warnings.extend(emb.notes.iter().cloned());
        let (rows_real, rows_synth) = paired_subsample(n, m, cfg.graph_sample_cap, cfg.seed);
        let cka_value = cka(
            &emb.z_real.select_rows(&rows_real),
            &emb.z_synth.select_rows(&rows_synth),
        )?;
        let awed_value = awed(&emb.z_real, &emb.z_synth)?;
        let g = build_knn_pair(
            &emb.z_real,
            &emb.z_synth,
            cfg.knn_k,
            cfg.graph_sample_cap,
            cfg.seed,
        )?;
        let s = structural_metrics(&g, cfg.seed)?;
        globals.structural = Some(StructuralGlobals {
            cka: cka_value,
            neighborhood_overlap: s.neighborhood_overlap,
            spectral_distance: s.spectral_distance,
            avg_wasserstein_embedding: awed_value,
            gsfs: s.gsfs.score,
        });
        sidecars.embedding_pca = Some(pca_points(&emb));
        sidecars.knn_graph = Some(KnnGraphSidecar::new(&g, &emb));
        embedding = Some(emb);
        graphs = Some(g);
    }

    let facts = RunFacts {
        real_dataset_path: cfg.real_path.display().to_string(),
        synthetic_dataset_path: cfg.synthetic_path.display().to_string(),
        number_of_samples_real: real.n_rows(),
        number_of_samples_synthetic: synth.n_rows(),
        schema: pair.schema.clone(),
        dropped_features: pair.dropped_features.clone(),
        synthetic_only: pair.synthetic_only.clone(),
        warnings,
        structural_skipped: skip_reason,
    };
    let report = assemble(facts, &quality, locals.clone(), &globals, &run_id, timestamp)?;

    Ok(Evaluation {
        run_id,
        report,
        sidecars,
        locals,
        globals,
        pair,
        dependency,
        embedding,
        graphs,
    })
}
