use std::fs;
use std::io::Write;
use std::path::Path;

use indexmap::IndexMap;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{FidelityReport, LOCAL_KEYS as NUMERIC_ORDER};
use crate::distribution::{LocalMetrics, MetricFamily};
use crate::error::ReportError;

const CATEGORICAL_ORDER: [&str; 10] = [
    "KS_Statistic",
    "JS_Divergence",
    "KL_Divergence",
    "Hellinger_Distance",
    "Total_Variation_Distance",
    "Wasserstein_Distance",
    "Chi_Square_Statistic",
    "Contingency_CramerV",
    "Category_Coverage",
    "Range_Coverage",
];

fn value_of(m: &LocalMetrics, key: &str) -> Option<f64> {
    match key {
        "KS_Statistic" => m.ks,
        "JS_Divergence" => m.jsd,
        "KL_Divergence" => m.kld,
        "Wasserstein_Distance" => m.wd,
        "Hellinger_Distance" => m.hd,
        "Total_Variation_Distance" => m.tvd,
        "Range_Coverage" => m.rc,
        "Chi_Square_Statistic" => m.css,
        "Contingency_CramerV" => m.cv,
        "Category_Coverage" => m.cc,
        _ => None,
    }
}

// Every key is always written; absent metrics render as null. Numeric and
// categorical features use different key orders.
impl Serialize for LocalMetrics {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let order = match self.family {
            MetricFamily::Numeric => NUMERIC_ORDER,
            MetricFamily::Categorical => CATEGORICAL_ORDER,
        };
        let mut map = serializer.serialize_map(Some(order.len()))?;
        for key in order {
            map.serialize_entry(key, &value_of(self, key))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LocalMetrics {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = IndexMap::<String, Option<f64>>::deserialize(deserializer)?;
        for key in raw.keys() {
            if !NUMERIC_ORDER.contains(&key.as_str()) {
                return Err(D::Error::custom(format!("unknown local metric `{key}`")));
            }
        }
        let get = |k: &str| raw.get(k).copied().flatten();
        let position = |k: &str| raw.get_index_of(k);
        let categorical = get("Chi_Square_Statistic").is_some()
            || get("Contingency_CramerV").is_some()
            || get("Category_Coverage").is_some()
            || position("Hellinger_Distance") < position("Wasserstein_Distance");
        Ok(LocalMetrics {
            family: if categorical {
                MetricFamily::Categorical
            } else {
                MetricFamily::Numeric
            },
            ks: get("KS_Statistic"),
            jsd: get("JS_Divergence"),
            kld: get("KL_Divergence"),
            wd: get("Wasserstein_Distance"),
            hd: get("Hellinger_Distance"),
            tvd: get("Total_Variation_Distance"),
            rc: get("Range_Coverage"),
            css: get("Chi_Square_Statistic"),
            cv: get("Contingency_CramerV"),
            cc: get("Category_Coverage"),
        })
    }
}

/// Pretty JSON with two-space indentation.
pub fn to_json(report: &FidelityReport) -> Result<String, ReportError> {
    Ok(serde_json::to_string_pretty(report)?)
}

pub fn parse_report(text: &str) -> Result<FidelityReport, ReportError> {
    Ok(serde_json::from_str(text)?)
}

/// Writes `bytes` through a temporary file in the same directory and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), ReportError> {
    let io_err = |source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).map_err(io_err)?;
    }
    let mut tmp_name = path.file_name().unwrap_or_default().to_os_string();
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    let result = fs::File::create(&tmp)
        .and_then(|mut f| {
            f.write_all(bytes)?;
            f.write_all(b"\n")?;
            f.sync_all()
        })
        .and_then(|_| fs::rename(&tmp, path));
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(io_err)
}

pub fn write_report(report: &FidelityReport, path: &Path) -> Result<(), ReportError> {
    write_atomic(path, to_json(report)?.as_bytes())
}
