mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

use common::fixtures;
use synthfid::report::{parse_report, DEPENDENCY_KEYS};
use synthfid::report::sidecars::Manifest;
use synthfid::{run_pipeline, RunConfig};

const BIN: &str = env!("CARGO_BIN_EXE_synthfid");

struct Workspace {
    dir: tempfile::TempDir,
}

impl Workspace {
    fn new() -> Self {
        Workspace {
            dir: tempfile::tempdir().unwrap(),
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn config(&self, real: &Path, synth: &Path, extra: &str) -> PathBuf {
        let text = format!(
            "real_dataset_path: {}\nsynthetic_dataset_path: {}\noutput_report: {}\nplots_dir: {}\n{extra}",
            real.display(),
            synth.display(),
            self.path("out/report.json").display(),
            self.path("out/plots").display(),
        );
        self.write("config.yaml", &text)
    }

    fn perturbed(&self) -> PathBuf {
        let p = self.path("synth.csv");
        fixtures::write_csv(&fixtures::perturbed_pima(11), &p);
        p
    }
}

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(BIN).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn evaluate(config: &Path, extra: &[&str]) -> (i32, String, String) {
    let mut args = vec!["evaluate", "--config", config.to_str().unwrap()];
    args.extend_from_slice(extra);
    run_cli(&args)
}

#[test]
fn end_to_end_writes_report_and_sidecars() {
    let ws = Workspace::new();
    let synth = ws.perturbed();
    let cfg = RunConfig::new(
        fixtures::pima_path(),
        &synth,
        ws.path("out/report.json"),
        ws.path("out/plots"),
    );
    let outcome = run_pipeline(&cfg).unwrap();
    let text = std::fs::read_to_string(&outcome.report_path).unwrap();
    assert!(text.ends_with('\n'));
    let report = parse_report(&text).unwrap();
    assert_eq!(&report, outcome.report());
    assert_eq!(report.local_metrics.len(), 9);
    assert_eq!(report.global_metrics.len(), 10);
    // Pima has a single categorical feature, so mutual information has no pairs.
    for (key, value) in &report.global_metrics {
        assert_eq!(value.is_none(), key == "Mutual_Information_Difference", "{key}");
    }

    let manifest = Manifest::read(&outcome.sidecar_dir).unwrap();
    assert_eq!(manifest.run_id, outcome.evaluation.run_id.as_str());
    let kinds: Vec<&str> = manifest.sidecars.iter().map(|e| e.kind.as_str()).collect();
    assert_eq!(
        kinds,
        ["histograms", "categorical_bars", "corr_matrices", "embedding_pca", "knn_graph"]
    );
    for entry in &manifest.sidecars {
        let body = std::fs::read_to_string(outcome.sidecar_dir.join(&entry.path)).unwrap();
        let _: Value = serde_json::from_str(&body).unwrap();
    }
    assert!(!std::fs::read_dir(&outcome.sidecar_dir)
        .unwrap()
        .any(|e| e.unwrap().path().extension().is_some_and(|x| x == "tmp")));
}

#[test]
fn runs_are_deterministic_up_to_timestamp() {
    let ws = Workspace::new();
    let synth = ws.perturbed();
    let config = ws.config(&fixtures::pima_path(), &synth, "seed: 5\n");
    let mut docs = Vec::new();
    for _ in 0..2 {
        let (code, stdout, _) = evaluate(&config, &[]);
        assert_eq!(code, 0);
        let mut doc: Value =
            serde_json::from_str(&std::fs::read_to_string(stdout.trim()).unwrap()).unwrap();
        doc["metadata"].as_object_mut().unwrap().remove("timestamp");
        docs.push(doc);
    }
    assert_eq!(docs[0], docs[1]);

    let (code, stdout, _) = evaluate(&config, &["--seed", "6"]);
    assert_eq!(code, 0);
    let other: Value =
        serde_json::from_str(&std::fs::read_to_string(stdout.trim()).unwrap()).unwrap();
    assert_ne!(other["metadata"]["run_id"], docs[0]["metadata"]["run_id"]);
}

#[test]
fn no_structural_flag_drops_structural_keys() {
    let ws = Workspace::new();
    let synth = ws.perturbed();
    let config = ws.config(&fixtures::pima_path(), &synth, "");
    let (code, stdout, _) = evaluate(&config, &["--no-structural"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(stdout.trim()).unwrap()).unwrap();
    let keys: Vec<&str> = doc["global_metrics"].as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, DEPENDENCY_KEYS);
    assert!(doc["metadata"]["structural_skipped"].is_string());
}

#[test]
fn config_errors_exit_1() {
    let ws = Workspace::new();
    let missing_key = ws.write("a.yaml", "real_dataset_path: x.csv\n");
    let (code, _, stderr) = evaluate(&missing_key, &[]);
    assert_eq!(code, 1);
    assert!(stderr.contains("synthetic_dataset_path"), "{stderr}");

    let bad_bins = ws.config(&fixtures::pima_path(), &fixtures::pima_path(), "bins: 1\n");
    assert_eq!(evaluate(&bad_bins, &[]).0, 1);

    let absent = ws.config(&ws.path("nope.csv"), &fixtures::pima_path(), "");
    assert_eq!(evaluate(&absent, &[]).0, 1);

    assert_eq!(evaluate(&ws.path("no_such.yaml"), &[]).0, 1);
}

#[test]
fn ingest_and_schema_errors_exit_2() {
    let ws = Workspace::new();
    let ragged = ws.write("ragged.csv", "a,b\n1,2\n3\n");
    let config = ws.config(&fixtures::pima_path(), &ragged, "");
    assert_eq!(evaluate(&config, &[]).0, 2);

    let disjoint = ws.write("disjoint.csv", "x,y\n1,2\n3,4\n");
    let config = ws.config(&fixtures::pima_path(), &disjoint, "");
    let (code, _, stderr) = evaluate(&config, &[]);
    assert_eq!(code, 2, "{stderr}");
}

#[test]
fn schema_command_prints_json_schema() {
    let (code, stdout, _) = run_cli(&["schema"]);
    assert_eq!(code, 0);
    let schema: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(schema["type"], "object");
    assert!(schema["required"].as_array().unwrap().len() == 4);
}
