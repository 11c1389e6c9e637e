use crate::error::CliError;
use serde_json::{json, Value};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Result<Format, CliError> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(CliError::usage(format!(
                "unknown format {other:?}; expected csv or json"
            ))),
        }
    }
}

/// A rectangular result table. Complex quantities appear as paired
/// `_re`/`_im` columns in CSV and as two-element arrays in JSON.
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Num(f64),
    Int(i64),
    Text(String),
    Complex(f64, f64),
}

impl Table {
    pub fn new(columns: &[&str]) -> Table {
        Table {
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn csv_header(&self) -> String {
        let mut parts = Vec::new();
        for (c, cell) in self.columns.iter().zip(self.rows.first().into_iter().flatten()) {
            match cell {
                Cell::Complex(_, _) => {
                    parts.push(format!("{c}_re"));
                    parts.push(format!("{c}_im"));
                }
                _ => parts.push(c.clone()),
            }
        }
        if self.rows.is_empty() {
            parts = self.columns.clone();
        }
        parts.join(",")
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.csv_header();
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row
                .iter()
                .flat_map(|cell| match cell {
                    Cell::Num(v) => vec![format!("{v:.17e}")],
                    Cell::Int(v) => vec![v.to_string()],
                    Cell::Text(s) => vec![s.clone()],
                    Cell::Complex(re, im) => vec![format!("{re:.17e}"), format!("{im:.17e}")],
                })
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (c, cell) in self.columns.iter().zip(row) {
                    let v = match cell {
                        Cell::Num(v) => json!(v),
                        Cell::Int(v) => json!(v),
                        Cell::Text(s) => json!(s),
                        Cell::Complex(re, im) => json!([re, im]),
                    };
                    obj.insert(c.clone(), v);
                }
                Value::Object(obj)
            })
            .collect();
        json!({ "columns": self.columns, "rows": rows })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => format!("{:#}\n", self.to_json()),
        }
    }
}

pub fn emit(text: &str, out: Option<&str>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
