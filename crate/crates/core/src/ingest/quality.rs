use indexmap::IndexMap;

use super::table::DataTable;
use super::types::FeatureSchema;
use crate::stats::{quantile_sorted, round_to, sorted};

/// Outlier share of one feature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OutlierShare {
    /// Percentage outside the Tukey fences, rounded to 2 decimals.
    pub pct: f64,
    /// Set when fewer than four values were available and `pct` is 0 by rule.
    pub insufficient: bool,
}

/// Percentage of values outside `[Q1 - 1.5 IQR, Q3 + 1.5 IQR]`, rounded to
/// two decimals. Quartiles use linear interpolation.
pub fn iqr_outlier_pct(values: &[f64]) -> OutlierShare {
    if values.len() < 4 {
        return OutlierShare {
            pct: 0.0,
            insufficient: true,
        };
    }
    let s = sorted(values);
    let q1 = quantile_sorted(&s, 0.25);
    let q3 = quantile_sorted(&s, 0.75);
    let iqr = q3 - q1;
    let lo = q1 - 1.5 * iqr;
    let hi = q3 + 1.5 * iqr;
    let outside = s.iter().filter(|&&v| v < lo || v > hi).count();
    OutlierShare {
        pct: round_to(100.0 * outside as f64 / s.len() as f64, 2),
        insufficient: false,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QualityProfile {
    pub total_missing: usize,
    /// `100 * (1 - missing / (rows * columns))`.
    pub completeness_pct: f64,
    pub missing_per_feature: IndexMap<String, usize>,
    /// Numeric features only, keyed in column order.
    pub outlier_pct: IndexMap<String, f64>,
}

/// Missing-value profile of a table. Outliers are filled in by
/// [`profile_outliers`].
pub fn completeness(table: &DataTable) -> QualityProfile {
    let cells = table.n_rows() * table.n_columns();
    let total_missing = table.total_missing();
    let completeness_pct = if cells == 0 {
        0.0
    } else {
        round_to(100.0 * (1.0 - total_missing as f64 / cells as f64), 2)
    };
    QualityProfile {
        total_missing,
        completeness_pct,
        missing_per_feature: table
            .columns()
            .iter()
            .map(|c| (c.name.clone(), c.missing_count()))
            .collect(),
        outlier_pct: IndexMap::new(),
    }
}

/// IQR outlier percentages for every numeric feature of `schema`.
pub fn profile_outliers(table: &DataTable, schema: &FeatureSchema) -> IndexMap<String, f64> {
    schema
        .numeric()
        .filter_map(|f| {
            let col = table.column(&f.name)?;
            let share = iqr_outlier_pct(&col.numbers());
            if share.insufficient {
                log::warn!("feature `{}` has fewer than 4 values; outliers set to 0", f.name);
            }
            Some((f.name.clone(), share.pct))
        })
        .collect()
}
