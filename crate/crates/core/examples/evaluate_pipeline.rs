//! Full run: writes a report and plot sidecars under a temp directory.
//!
//! cargo run --release --example evaluate_pipeline

mod shared;

use synthfid::report::sidecars::Manifest;
use synthfid::{run_pipeline, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("synthfid-example");
    std::fs::create_dir_all(&dir)?;
    let synth = dir.join("pima_noisy.csv");
    shared::write_csv(&shared::noisy_pima(6), &synth);

    let cfg = RunConfig::new(shared::pima_path(), &synth, dir.join("report.json"), dir.join("plots"));
    let outcome = run_pipeline(&cfg)?;
    let report = outcome.report();

    println!("run {} -> {}", report.metadata.run_id, outcome.report_path.display());
    for (key, value) in &report.global_metrics {
        println!("  {key:<42} {}", value.map_or("null".into(), |v| v.to_string()));
    }
    for w in &report.metadata.warnings {
        println!("  warning: {w}");
    }
    let manifest = Manifest::read(&outcome.sidecar_dir)?;
    for entry in manifest.sidecars {
        println!("  sidecar {:<17} {}", entry.kind, outcome.sidecar_dir.join(entry.path).display());
    }
    Ok(())
}
