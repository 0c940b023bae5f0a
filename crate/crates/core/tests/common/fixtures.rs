//! Seeded table generators and file helpers.

use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use synthfid::ingest::{Cell, Column, DataTable};

pub fn pima_path() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data/pima.csv")
}

#[derive(Debug, Clone, Copy)]
pub enum ColumnSpec {
    Continuous,
    Ordinal,
    Binary,
    Multi,
}

fn normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller
    let u: f64 = rng.random_range(f64::EPSILON..1.0);
    let v: f64 = rng.random();
    (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
}

/// One column of `rows` cells; `missing` is the per-cell missing probability.
pub fn random_column(
    rng: &mut ChaCha8Rng,
    name: &str,
    spec: ColumnSpec,
    rows: usize,
    missing: f64,
    shift: f64,
) -> Column {
    let cells = (0..rows)
        .map(|_| {
            if missing > 0.0 && rng.random_bool(missing) {
                return Cell::Missing;
            }
            match spec {
                ColumnSpec::Continuous => {
                    Cell::Number(((normal(rng) * 3.0 + shift) * 1e6).round() / 1e6)
                }
                ColumnSpec::Ordinal => Cell::Number(rng.random_range(0..20) as f64),
                ColumnSpec::Binary => Cell::Text(if rng.random_bool(0.3) { "yes" } else { "no" }.into()),
                ColumnSpec::Multi => Cell::Text(format!("c{}", rng.random_range(0..5))),
            }
        })
        .collect();
    Column::new(name, cells)
}

pub fn random_table(
    rng: &mut ChaCha8Rng,
    specs: &[ColumnSpec],
    rows: usize,
    missing: f64,
    shift: f64,
) -> DataTable {
    let cols = specs
        .iter()
        .enumerate()
        .map(|(i, &s)| random_column(rng, &format!("f{i}"), s, rows, missing, shift))
        .collect();
    DataTable::new(cols).unwrap()
}

pub fn random_specs(rng: &mut ChaCha8Rng, max_features: usize) -> Vec<ColumnSpec> {
    let d = rng.random_range(1..=max_features);
    (0..d)
        .map(|_| match rng.random_range(0..4) {
            0 => ColumnSpec::Continuous,
            1 => ColumnSpec::Ordinal,
            2 => ColumnSpec::Binary,
            _ => ColumnSpec::Multi,
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Number(v) => format!("{v}"),
        Cell::Text(s) => s.clone(),
        Cell::Missing => String::new(),
    }
}

pub fn write_csv(table: &DataTable, path: &Path) {
    let mut w = csv::Writer::from_path(path).unwrap();
    w.write_record(table.column_names()).unwrap();
    for i in 0..table.n_rows() {
        w.write_record(table.columns().iter().map(|c| cell_text(&c.values[i])))
            .unwrap();
    }
    w.flush().unwrap();
}

/// Pima with seeded multiplicative noise on numeric columns and 5% of the
/// outcome labels flipped.
pub fn perturbed_pima(seed: u64) -> DataTable {
    let real = synthfid::ingest::load_csv(pima_path()).unwrap();
    let mut rng = rng(seed);
    let cols = real
        .columns()
        .iter()
        .map(|c| {
            let values = c
                .values
                .iter()
                .map(|cell| match cell {
                    Cell::Number(v) if c.name == "Outcome" => {
                        if rng.random_bool(0.05) { Cell::Number(1.0 - v) } else { Cell::Number(*v) }
                    }
                    Cell::Number(v) => {
                        let noisy = v * (1.0 + 0.1 * normal(&mut rng));
                        Cell::Number((noisy.max(0.0) * 1000.0).round() / 1000.0)
                    }
                    other => other.clone(),
                })
                .collect();
            Column::new(c.name.clone(), values)
        })
        .collect();
    DataTable::new(cols).unwrap()
}
