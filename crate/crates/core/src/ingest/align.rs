use std::fmt;

use serde::{Deserialize, Serialize};

use super::table::DataTable;
use super::types::{detect_types, FeatureInfo, FeatureKind, FeatureSchema, TypeThresholds};
use crate::error::SchemaError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DropReason {
    #[serde(rename = "missing-in-synthetic")]
    MissingInSynthetic,
    #[serde(rename = "kind-mismatch")]
    KindMismatch,
}

impl fmt::Display for DropReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DropReason::MissingInSynthetic => "missing-in-synthetic",
            DropReason::KindMismatch => "kind-mismatch",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DroppedFeature {
    pub name: String,
    pub reason: DropReason,
}

/// Real and synthetic tables restricted to their common comparable features.
#[derive(Debug, Clone, PartialEq)]
pub struct AlignedPair {
    pub real: DataTable,
    pub synthetic: DataTable,
    /// One entry per common feature, kinds detected on the real table.
    pub schema: FeatureSchema,
    pub dropped_features: Vec<DroppedFeature>,
    /// Columns present only in the synthetic table.
    pub synthetic_only: Vec<String>,
}

impl AlignedPair {
    pub fn feature_names(&self) -> Vec<&str> {
        self.schema.names()
    }
}

/// Whether a synthetic column can be evaluated against a real feature.
///
/// Numeric real features need an all-numeric synthetic column (a collapsed
/// synthetic column with few distinct values is still comparable);
/// categorical real features need a categorical synthetic column.
pub fn kinds_compatible(real: &FeatureInfo, synthetic: &FeatureInfo) -> bool {
    if synthetic.all_missing {
        return false;
    }
    match real.kind {
        FeatureKind::Continuous | FeatureKind::Ordinal => synthetic.all_numeric,
        FeatureKind::BinaryCategorical | FeatureKind::MultiCategorical => {
            synthetic.kind.is_categorical()
        }
        FeatureKind::Text => !synthetic.kind.is_numeric(),
    }
}

/// Keeps the features both tables share with compatible kinds, in the real
/// table's column order.
pub fn align(
    real: &DataTable,
    synthetic: &DataTable,
    thresholds: TypeThresholds,
) -> Result<AlignedPair, SchemaError> {
    let real_schema = detect_types(real, thresholds);
    let synth_schema = detect_types(synthetic, thresholds);

    let mut kept: Vec<FeatureInfo> = Vec::new();
    let mut dropped = Vec::new();
    for info in &real_schema.features {
        match synth_schema.get(&info.name) {
            None => dropped.push(DroppedFeature {
                name: info.name.clone(),
                reason: DropReason::MissingInSynthetic,
            }),
            Some(s) if !kinds_compatible(info, s) => {
                log::warn!(
                    "feature `{}` dropped: real {:?} vs synthetic {:?}",
                    info.name,
                    info.kind,
                    s.kind
                );
                dropped.push(DroppedFeature {
                    name: info.name.clone(),
                    reason: DropReason::KindMismatch,
                })
            }
            Some(_) => kept.push(info.clone()),
        }
    }
    let synthetic_only = synthetic
        .column_names()
        .filter(|n| real.column(n).is_none())
        .map(str::to_string)
        .collect();

    if kept.is_empty() {
        return Err(SchemaError::EmptyIntersection);
    }
    let names: Vec<&str> = kept.iter().map(|f| f.name.as_str()).collect();
    Ok(AlignedPair {
        real: real.select(&names),
        synthetic: synthetic.select(&names),
        schema: FeatureSchema { features: kept },
        dropped_features: dropped,
        synthetic_only,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::table::{Cell, Column};

    fn col(name: &str, vals: &[&str]) -> Column {
        Column::new(name, vals.iter().map(|v| Cell::parse(v)).collect())
    }

    fn table(cols: Vec<Column>) -> DataTable {
        DataTable::new(cols).unwrap()
    }

    #[test]
    fn identical_tables_drop_nothing() {
        let t = table(vec![
            col("a", &["1.5", "2.5", "3.5", "4.5"]),
            col("b", &["x", "y", "x", "y"]),
        ]);
        let pair = align(&t, &t, TypeThresholds::default()).unwrap();
        assert!(pair.dropped_features.is_empty());
        assert_eq!(pair.feature_names(), vec!["a", "b"]);
    }

    #[test]
    fn missing_in_synthetic() {
        let real = table(vec![
            col("a", &["1.5", "2.5", "3.5", "4.5"]),
            col("b", &["x", "y", "x", "y"]),
        ]);
        let synth = table(vec![
            col("a", &["1.1", "2.2", "3.3", "4.4"]),
            col("c", &["0.5", "0.7", "0.9", "1.3"]),
        ]);
        let pair = align(&real, &synth, TypeThresholds::default()).unwrap();
        assert_eq!(pair.feature_names(), vec!["a"]);
        assert_eq!(
            pair.dropped_features,
            vec![DroppedFeature {
                name: "b".into(),
                reason: DropReason::MissingInSynthetic
            }]
        );
        assert_eq!(pair.synthetic_only, vec!["c".to_string()]);
    }

    #[test]
    fn numeric_vs_strings_is_kind_mismatch() {
        let real = table(vec![
            col("a", &["1.5", "2.5", "3.5", "4.5"]),
            col("k", &["1", "2", "3", "4"]),
        ]);
        let synth = table(vec![
            col("a", &["low", "high", "low", "mid"]),
            col("k", &["1", "2", "3", "4"]),
        ]);
        let pair = align(&real, &synth, TypeThresholds::default()).unwrap();
        assert_eq!(pair.feature_names(), vec!["k"]);
        assert_eq!(pair.dropped_features[0].reason, DropReason::KindMismatch);
        assert_eq!(pair.dropped_features[0].reason.to_string(), "kind-mismatch");
    }

    #[test]
    fn empty_intersection_errors() {
        let real = table(vec![col("a", &["1", "2"])]);
        let synth = table(vec![col("b", &["1", "2"])]);
        assert!(matches!(
            align(&real, &synth, TypeThresholds::default()),
            Err(SchemaError::EmptyIntersection)
        ));
    }

    #[test]
    fn idempotent() {
        let real = table(vec![
            col("a", &["1.5", "2.5", "3.5", "4.5"]),
            col("b", &["x", "y", "x", "y"]),
            col("z", &["9", "8", "7", "6"]),
        ]);
        let synth = table(vec![
            col("b", &["x", "x", "y", "y"]),
            col("a", &["1.0", "2.0", "3.75", "0.25"]),
        ]);
        let th = TypeThresholds::default();
        let once = align(&real, &synth, th).unwrap();
        let twice = align(&once.real, &once.synthetic, th).unwrap();
        assert_eq!(once.real, twice.real);
        assert_eq!(once.synthetic, twice.synthetic);
        assert_eq!(once.schema, twice.schema);
    }
}
