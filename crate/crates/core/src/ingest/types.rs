use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::table::{Column, DataTable};
use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FeatureKind {
    Continuous,
    Ordinal,
    BinaryCategorical,
    MultiCategorical,
    Text,
}

impl FeatureKind {
    /// Continuous and ordinal features receive the numeric metric set.
    pub fn is_numeric(self) -> bool {
        matches!(self, FeatureKind::Continuous | FeatureKind::Ordinal)
    }

    pub fn is_categorical(self) -> bool {
        matches!(
            self,
            FeatureKind::BinaryCategorical | FeatureKind::MultiCategorical
        )
    }
}

/// Thresholds for the type ladder, usually taken from a [`RunConfig`].
#[derive(Debug, Clone, Copy)]
pub struct TypeThresholds {
    pub categorical_unique_max: usize,
    pub ordinal_unique_max: usize,
}

impl From<&RunConfig> for TypeThresholds {
    fn from(cfg: &RunConfig) -> Self {
        TypeThresholds {
            categorical_unique_max: cfg.categorical_unique_max,
            ordinal_unique_max: cfg.ordinal_unique_max,
        }
    }
}

impl Default for TypeThresholds {
    fn default() -> Self {
        TypeThresholds {
            categorical_unique_max: crate::config::DEFAULT_CATEGORICAL_UNIQUE_MAX,
            ordinal_unique_max: crate::config::DEFAULT_ORDINAL_UNIQUE_MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FeatureInfo {
    pub name: String,
    pub kind: FeatureKind,
    /// Distinct non-missing values.
    pub unique_count: usize,
    pub numeric_range: Option<(f64, f64)>,
    /// Category labels ordered by descending frequency, then lexicographically.
    pub categories: Option<Vec<String>>,
    /// Every non-missing cell parsed as a number.
    pub all_numeric: bool,
    /// Set when the column had no non-missing value at all.
    pub all_missing: bool,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct FeatureSchema {
    pub features: Vec<FeatureInfo>,
}

impl FeatureSchema {
    pub fn get(&self, name: &str) -> Option<&FeatureInfo> {
        self.features.iter().find(|f| f.name == name)
    }

    pub fn count(&self, pred: impl Fn(FeatureKind) -> bool) -> usize {
        self.features.iter().filter(|f| pred(f.kind)).count()
    }

    pub fn numeric(&self) -> impl Iterator<Item = &FeatureInfo> {
        self.features.iter().filter(|f| f.kind.is_numeric())
    }

    pub fn categorical(&self) -> impl Iterator<Item = &FeatureInfo> {
        self.features.iter().filter(|f| f.kind.is_categorical())
    }

    pub fn names(&self) -> Vec<&str> {
        self.features.iter().map(|f| f.name.as_str()).collect()
    }
}

/// Category labels of a column, most frequent first, ties broken lexicographically.
pub fn ordered_categories(column: &Column) -> Vec<String> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for label in column.labels() {
        *counts.entry(label).or_default() += 1;
    }
    let mut cats: Vec<(String, usize)> = counts.into_iter().collect();
    // BTreeMap iteration is already lexicographic; a stable sort keeps that
    // order among equal counts.
    cats.sort_by(|a, b| b.1.cmp(&a.1));
    cats.into_iter().map(|(c, _)| c).collect()
}

/// Classifies one column.
///
/// Ladder: non-numeric cells make the column categorical (binary with two
/// values, else text when more than half the rows are distinct); numeric
/// columns with two values are binary; integer columns are
/// multi-categorical up to
/// `categorical_unique_max` values and ordinal up to `ordinal_unique_max`;
/// everything else is continuous.
pub fn detect_column(column: &Column, thresholds: TypeThresholds) -> FeatureInfo {
    let n_rows = column.values.len();
    let mut labels = BTreeSet::new();
    let mut all_numeric = true;
    let mut all_integer = true;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    let mut present = 0usize;

    for cell in &column.values {
        if let Some(label) = cell.label() {
            present += 1;
            labels.insert(label);
        }
        match cell {
            super::table::Cell::Number(v) => {
                min = min.min(*v);
                max = max.max(*v);
                if v.fract() != 0.0 {
                    all_integer = false;
                }
            }
            super::table::Cell::Text(_) => all_numeric = false,
            super::table::Cell::Missing => {}
        }
    }
    let unique_count = labels.len();

    let kind = if present == 0 {
        FeatureKind::Text
    } else if !all_numeric {
        if unique_count == 2 {
            FeatureKind::BinaryCategorical
        } else if unique_count as f64 > 0.5 * n_rows as f64 {
            FeatureKind::Text
        } else {
            FeatureKind::MultiCategorical
        }
    } else if unique_count == 2 {
        FeatureKind::BinaryCategorical
    } else if all_integer && unique_count <= thresholds.categorical_unique_max {
        FeatureKind::MultiCategorical
    } else if all_integer && unique_count <= thresholds.ordinal_unique_max {
        FeatureKind::Ordinal
    } else {
        FeatureKind::Continuous
    };

    let numeric_range = (all_numeric && present > 0).then_some((min, max));
    let categories = kind.is_categorical().then(|| ordered_categories(column));

    FeatureInfo {
        name: column.name.clone(),
        kind,
        unique_count,
        numeric_range,
        categories,
        all_numeric: all_numeric && present > 0,
        all_missing: present == 0,
    }
}

/// Classifies every column of a table.
pub fn detect_types(table: &DataTable, thresholds: TypeThresholds) -> FeatureSchema {
    FeatureSchema {
        features: table
            .columns()
            .iter()
            .map(|c| {
                let info = detect_column(c, thresholds);
                if info.all_missing {
                    log::warn!("column `{}` has no values; treated as text", c.name);
                }
                info
            })
            .collect(),
    }
}
