use std::collections::HashSet;
use std::path::Path;

use crate::error::IngestError;

/// One parsed CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Text(String),
    Missing,
}

impl Cell {
    /// Parses a raw field: empty ⇒ missing, full decimal literal ⇒ number,
    /// anything else ⇒ text.
    pub fn parse(raw: &str) -> Cell {
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            return Cell::Missing;
        }
        if is_decimal_literal(trimmed) {
            if let Ok(v) = trimmed.parse::<f64>() {
                return Cell::Number(v);
            }
        }
        Cell::Text(raw.to_string())
    }

    pub fn is_missing(&self) -> bool {
        matches!(self, Cell::Missing)
    }

    pub fn as_number(&self) -> Option<f64> {
        match self {
            Cell::Number(v) => Some(*v),
            _ => None,
        }
    }

    /// Category label of a non-missing cell. Numbers use Rust's shortest
    /// round-trip formatting, so `1.0` and `1` share the label `"1"`.
    pub fn label(&self) -> Option<String> {
        match self {
            Cell::Number(v) => Some(format!("{v}")),
            Cell::Text(s) => Some(s.clone()),
            Cell::Missing => None,
        }
    }
}

// Accepts [+-]digits[.digits][e[+-]digits]; rejects "inf", "nan", hex and
// other spellings `f64::from_str` would otherwise take.
fn is_decimal_literal(s: &str) -> bool {
    let b = s.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
        i += 1;
    }
    let int_start = i;
    while i < b.len() && b[i].is_ascii_digit() {
        i += 1;
    }
    let mut digits = i - int_start;
    if i < b.len() && b[i] == b'.' {
        i += 1;
        let frac_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        digits += i - frac_start;
    }
    if digits == 0 {
        return false;
    }
    if i < b.len() && (b[i] == b'e' || b[i] == b'E') {
        i += 1;
        if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
            i += 1;
        }
        let exp_start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        if i == exp_start {
            return false;
        }
    }
    i == b.len()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: String,
    pub values: Vec<Cell>,
}

impl Column {
    pub fn new(name: impl Into<String>, values: Vec<Cell>) -> Self {
        Column {
            name: name.into(),
            values,
        }
    }

    /// Non-missing numeric values, in row order.
    pub fn numbers(&self) -> Vec<f64> {
        self.values.iter().filter_map(Cell::as_number).collect()
    }

    /// Non-missing category labels, in row order.
    pub fn labels(&self) -> Vec<String> {
        self.values.iter().filter_map(Cell::label).collect()
    }

    pub fn missing_count(&self) -> usize {
        self.values.iter().filter(|c| c.is_missing()).count()
    }
}

/// Column-major table. Every column holds exactly `n_rows` cells.
#[derive(Debug, Clone, PartialEq)]
pub struct DataTable {
    columns: Vec<Column>,
    n_rows: usize,
}

impl DataTable {
    /// Builds a table, checking that columns are equally long and uniquely named.
    pub fn new(columns: Vec<Column>) -> Result<Self, IngestError> {
        let n_rows = columns.first().map_or(0, |c| c.values.len());
        let mut seen = HashSet::new();
        for col in &columns {
            if col.values.len() != n_rows {
                return Err(IngestError::ColumnLength {
                    name: col.name.clone(),
                    expected: n_rows,
                    found: col.values.len(),
                });
            }
            if !seen.insert(col.name.as_str()) {
                return Err(IngestError::DuplicateColumn {
                    path: "<memory>".into(),
                    name: col.name.clone(),
                });
            }
        }
        Ok(DataTable { columns, n_rows })
    }

    /// Convenience constructor for numeric-only tables.
    pub fn from_numeric(names: &[&str], rows: &[Vec<f64>]) -> Result<Self, IngestError> {
        let columns = names
            .iter()
            .enumerate()
            .map(|(j, name)| Column::new(*name, rows.iter().map(|r| Cell::Number(r[j])).collect()))
            .collect();
        DataTable::new(columns)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn column_names(&self) -> impl Iterator<Item = &str> {
        self.columns.iter().map(|c| c.name.as_str())
    }

    /// New table holding only the named columns, in the given order.
    pub fn select(&self, names: &[&str]) -> DataTable {
        let columns = names
            .iter()
            .filter_map(|n| self.column(n).cloned())
            .collect();
        DataTable {
            columns,
            n_rows: self.n_rows,
        }
    }

    pub fn total_missing(&self) -> usize {
        self.columns.iter().map(Column::missing_count).sum()
    }
}

/// Parses CSV bytes that start with a header row.
pub fn parse_csv(bytes: &[u8], path: &Path) -> Result<DataTable, IngestError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(bytes);

    let headers = reader.headers().map_err(|e| IngestError::Csv {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    if headers.is_empty() {
        return Err(IngestError::MissingHeader {
            path: path.to_path_buf(),
        });
    }
    let names: Vec<String> = headers.iter().map(|h| h.trim().to_string()).collect();
    let width = names.len();
    let mut values: Vec<Vec<Cell>> = vec![Vec::new(); width];

    for (idx, record) in reader.records().enumerate() {
        let record = record.map_err(|e| IngestError::Csv {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?;
        if record.len() != width {
            return Err(IngestError::Ragged {
                path: path.to_path_buf(),
                // 1-based data row index; the header is row 0.
                row: idx + 1,
                expected: width,
                found: record.len(),
            });
        }
        for (j, field) in record.iter().enumerate() {
            values[j].push(Cell::parse(field));
        }
    }

    let columns = names
        .into_iter()
        .zip(values)
        .map(|(name, vals)| Column::new(name, vals))
        .collect();
    DataTable::new(columns).map_err(|e| match e {
        IngestError::DuplicateColumn { name, .. } => IngestError::DuplicateColumn {
            path: path.to_path_buf(),
            name,
        },
        other => other,
    })
}

/// Loads a UTF-8, comma-delimited CSV file with a header row.
pub fn load_csv(path: impl AsRef<Path>) -> Result<DataTable, IngestError> {
    let path = path.as_ref();
    let bytes = std::fs::read(path).map_err(|source| IngestError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_csv(&bytes, path)
}
