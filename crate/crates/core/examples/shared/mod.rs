//! Helpers shared by the examples: the bundled Pima table and a noisy copy.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synthfid::ingest::{load_csv, Cell, Column, DataTable};

pub fn pima_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/pima.csv")
}

pub fn pima() -> DataTable {
    load_csv(pima_path()).expect("bundled pima.csv")
}

/// Pima with up to ±15% multiplicative noise on every measurement and a few
/// outcome labels flipped.
pub fn noisy_pima(seed: u64) -> DataTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cols = pima()
        .columns()
        .iter()
        .map(|c| {
            let values = c
                .values
                .iter()
                .map(|cell| match *cell {
                    Cell::Number(v) if c.name == "Outcome" && rng.random_bool(0.05) => {
                        Cell::Number(1.0 - v)
                    }
                    Cell::Number(v) if c.name == "Outcome" => Cell::Number(v),
                    Cell::Number(v) => {
                        let noisy = v * rng.random_range(0.85..1.15);
                        Cell::Number((noisy * 1000.0).round() / 1000.0)
                    }
                    ref other => other.clone(),
                })
                .collect();
            Column::new(c.name.clone(), values)
        })
        .collect();
    DataTable::new(cols).unwrap()
}

pub fn write_csv(table: &DataTable, path: &Path) {
    let mut w = csv::Writer::from_path(path).unwrap();
    w.write_record(table.column_names()).unwrap();
    for row in 0..table.n_rows() {
        let record: Vec<String> = table
            .columns()
            .iter()
            .map(|c| c.values[row].label().unwrap_or_default())
            .collect();
        w.write_record(&record).unwrap();
    }
    w.flush().unwrap();
}
