//! Loading, type detection, schema alignment and data-quality profiling.

mod align;
mod quality;
mod table;
mod types;

pub use align::{align, kinds_compatible, AlignedPair, DropReason, DroppedFeature};
pub use quality::{completeness, iqr_outlier_pct, profile_outliers, OutlierShare, QualityProfile};
pub use table::{load_csv, parse_csv, Cell, Column, DataTable};
pub use types::{
    detect_column, detect_types, ordered_categories, FeatureInfo, FeatureKind, FeatureSchema,
    TypeThresholds,
};
