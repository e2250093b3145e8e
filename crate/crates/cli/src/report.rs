//! The report envelope every subcommand produces, and its three renderings.
//!
//! JSON is one object with keys `command`, `inputs`, `results`, `warnings`.
//! CSV is either quantity-major (`quantity,unit,<series...>`, one line per
//! quantity) or series-major (one line per node / problem size, headers
//! carrying the unit as a suffix), chosen by the command.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use qden_core::units::round_sig;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected table, csv or json)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Null,
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl Value {
    pub fn is_numeric(&self) -> bool {
        matches!(self, Value::Int(_) | Value::Float(_))
    }
}

impl From<f64> for Value {
    fn from(v: f64) -> Self {
        Value::Float(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::Int(v.into())
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        i64::try_from(v).map(Value::Int).unwrap_or(Value::Float(v as f64))
    }
}

impl From<usize> for Value {
    fn from(v: usize) -> Self {
        (v as u64).into()
    }
}

impl From<&String> for Value {
    fn from(v: &String) -> Self {
        Value::Text(v.clone())
    }
}

impl From<bool> for Value {
    fn from(v: bool) -> Self {
        Value::Bool(v)
    }
}

impl From<&str> for Value {
    fn from(v: &str) -> Self {
        Value::Text(v.to_string())
    }
}

impl From<String> for Value {
    fn from(v: String) -> Self {
        Value::Text(v)
    }
}

impl<T: Into<Value>> From<Option<T>> for Value {
    fn from(v: Option<T>) -> Self {
        v.map_or(Value::Null, Into::into)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Null => Ok(()),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(i) => write!(f, "{i}"),
            // Debug keeps full round-trip precision and switches to
            // exponent notation for very small or large magnitudes.
            Value::Float(x) => write!(f, "{x:?}"),
            Value::Text(s) => f.write_str(s),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    ByQuantity,
    BySeries,
}

/// One named result, with one value per series entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    pub name: String,
    pub unit: String,
    pub values: Vec<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Results {
    pub orientation: Orientation,
    pub series_label: String,
    pub series: Vec<String>,
    pub quantities: Vec<Quantity>,
}

impl Results {
    pub fn new(orientation: Orientation, series_label: &str, series: Vec<String>) -> Self {
        Results {
            orientation,
            series_label: series_label.to_string(),
            series,
            quantities: Vec::new(),
        }
    }

    /// Appends a quantity. Panics if the value count does not match the series.
    pub fn push<V: Into<Value>>(&mut self, name: &str, unit: &str, values: impl IntoIterator<Item = V>) {
        let values: Vec<Value> = values.into_iter().map(Into::into).collect();
        assert_eq!(
            values.len(),
            self.series.len(),
            "quantity `{name}` has {} values for {} series",
            values.len(),
            self.series.len()
        );
        self.quantities.push(Quantity {
            name: name.to_string(),
            unit: unit.to_string(),
            values,
        });
    }

    pub fn get(&self, name: &str) -> Option<&Quantity> {
        self.quantities.iter().find(|q| q.name == name)
    }

    fn grid(&self) -> Vec<Vec<String>> {
        self.grid_with(&ToString::to_string)
    }

    fn grid_with(&self, cell: &dyn Fn(&Value) -> String) -> Vec<Vec<String>> {
        match self.orientation {
            Orientation::ByQuantity => {
                let mut header = vec!["quantity".to_string(), "unit".to_string()];
                header.extend(self.series.iter().cloned());
                let mut rows = vec![header];
                for q in &self.quantities {
                    let mut row = vec![q.name.clone(), q.unit.clone()];
                    row.extend(q.values.iter().map(cell));
                    rows.push(row);
                }
                rows
            }
            Orientation::BySeries => {
                let mut header = vec![self.series_label.clone()];
                header.extend(self.quantities.iter().map(column_name));
                let mut rows = vec![header];
                for (i, s) in self.series.iter().enumerate() {
                    let mut row = vec![s.clone()];
                    row.extend(self.quantities.iter().map(|q| cell(&q.values[i])));
                    rows.push(row);
                }
                rows
            }
        }
    }
}

/// `name_unit`, with the unit made identifier-safe.
fn column_name(q: &Quantity) -> String {
    if q.unit.is_empty() || q.unit == "1" {
        return q.name.clone();
    }
    let unit = q.unit.replace('/', "_per_").replace('^', "");
    format!("{}_{}", q.name, unit)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Results,
    pub warnings: Vec<String>,
}

impl ReportEnvelope {
    pub fn new(command: &str, results: Results) -> Self {
        ReportEnvelope {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results,
            warnings: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into().to_string());
        self
    }

    /// Numeric results lacking a unit string.
    pub fn unitless_numeric(&self) -> Vec<&str> {
        self.results
            .quantities
            .iter()
            .filter(|q| q.unit.is_empty() && q.values.iter().any(Value::is_numeric))
            .map(|q| q.name.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        for row in self.results.grid() {
            wtr.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(wtr.into_inner().expect("in-memory flush")).expect("utf-8 output")
    }

    pub fn to_table(&self) -> String {
        let grid = self.results.grid_with(&|v| match v {
            Value::Float(x) => format!("{:?}", round_sig(*x, 6)),
            other => other.to_string(),
        });
        let cols = grid.first().map_or(0, Vec::len);
        let widths: Vec<usize> = (0..cols)
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "# {}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "#   {k} = {v}");
        }
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        for w in &self.warnings {
            let _ = writeln!(out, "warning: {w}");
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Csv => self.to_csv(),
            Format::Json => {
                let mut s = self.to_json();
                s.push('\n');
                s
            }
        }
    }
}
