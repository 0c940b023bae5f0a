//! Covariance and correlation structure of Pima against a noisy copy.
//!
//! cargo run --example dependency_metrics

mod shared;

use synthfid::dependency::dependency_metrics;
use synthfid::ingest::{align, TypeThresholds};

fn main() {
    let pair = align(&shared::pima(), &shared::noisy_pima(2), TypeThresholds::default()).unwrap();
    let dep = dependency_metrics(&pair).unwrap();
    for (name, v) in [
        ("covariance Frobenius gap", dep.cms),
        ("correlation matrix distance", dep.cmd),
        ("mean |Pearson gap|", dep.cdp),
        ("mean |Spearman gap|", dep.cds),
        ("mutual information gap", dep.mid),
    ] {
        match v {
            Some(v) => println!("{name:<28} {v:.5}"),
            None => println!("{name:<28} n/a"),
        }
    }
    if let Some(stats) = &dep.stats {
        let i = stats.feature_order.iter().position(|f| f == "Glucose").unwrap();
        let j = stats.feature_order.iter().position(|f| f == "Insulin").unwrap();
        println!(
            "Pearson(Glucose, Insulin): real {:.3}, noisy {:.3}",
            stats.pearson_real[(i, j)],
            stats.pearson_synth[(i, j)]
        );
    }
}
