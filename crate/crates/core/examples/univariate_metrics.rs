//! Per-feature distances between Pima and a noisy copy.
//!
//! cargo run --example univariate_metrics

mod shared;

use synthfid::distribution::evaluate_feature;
use synthfid::ingest::{align, TypeThresholds};

fn fmt(v: Option<f64>) -> String {
    v.map_or("null".into(), |v| format!("{v:.4}"))
}

fn main() {
    let pair = align(&shared::pima(), &shared::noisy_pima(1), TypeThresholds::default()).unwrap();
    println!(
        "{:<26} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7}",
        "feature", "KS", "JSD", "WD", "HD", "TVD", "CramerV"
    );
    for f in &pair.schema.features {
        let real = pair.real.column(&f.name).unwrap();
        let synth = pair.synthetic.column(&f.name).unwrap();
        let Some(eval) = evaluate_feature(real, synth, f.kind, 20).unwrap() else {
            continue;
        };
        let m = eval.metrics;
        println!(
            "{:<26} {:>7} {:>7} {:>7} {:>7} {:>7} {:>7}",
            f.name,
            fmt(m.ks),
            fmt(m.jsd),
            fmt(m.wd),
            fmt(m.hd),
            fmt(m.tvd),
            fmt(m.cv)
        );
    }
}
