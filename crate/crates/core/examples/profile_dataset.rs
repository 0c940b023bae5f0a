//! Feature types, completeness and IQR outlier shares of the Pima table.
//!
//! cargo run --example profile_dataset

mod shared;

use synthfid::ingest::{completeness, detect_types, profile_outliers, TypeThresholds};

fn main() {
    let table = shared::pima();
    let schema = detect_types(&table, TypeThresholds::default());
    let quality = completeness(&table);
    let outliers = profile_outliers(&table, &schema);

    println!("{} rows, {:.2}% complete", table.n_rows(), quality.completeness_pct);
    println!("{:<26} {:<20} {:>7} {:>10}", "feature", "kind", "unique", "outliers%");
    for f in &schema.features {
        let share = outliers.get(&f.name).map_or("-".to_string(), |p| format!("{p:.2}"));
        println!("{:<26} {:<20} {:>7} {:>10}", f.name, format!("{:?}", f.kind), f.unique_count, share);
    }
}
