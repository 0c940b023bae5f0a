//! Builds a report in memory and checks it against the bundled JSON Schema's
//! required blocks, then prints one local entry.
//!
//! cargo run --example report_schema

mod shared;

use synthfid::report::{parse_report, to_json};
use synthfid::{evaluate, RunConfig};

const SCHEMA: &str = include_str!("../schema/report.schema.json");

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("synthfid-schema-example");
    std::fs::create_dir_all(&dir)?;
    let synth = dir.join("pima_noisy.csv");
    shared::write_csv(&shared::noisy_pima(7), &synth);

    let mut cfg = RunConfig::new(shared::pima_path(), &synth, dir.join("r.json"), dir.join("plots"));
    cfg.enable_structural = false;
    let ts = chrono::Local::now().naive_local();
    let report = evaluate(&cfg, ts)?.report;

    let text = to_json(&report)?;
    assert_eq!(parse_report(&text)?, report);

    let schema: serde_json::Value = serde_json::from_str(SCHEMA)?;
    let doc: serde_json::Value = serde_json::from_str(&text)?;
    for block in schema["required"].as_array().unwrap() {
        let block = block.as_str().unwrap();
        println!("{block:<20} {}", if doc.get(block).is_some() { "present" } else { "MISSING" });
    }
    println!("{}", serde_json::to_string_pretty(&doc["local_metrics"]["Outcome"])?);
    Ok(())
}
