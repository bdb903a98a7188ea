//! Deterministic table emission: CSV (RFC 4180 with a header row, LF line
//! endings) or JSON lines. Floats are printed with 17 significant digits so
//! identical configs produce identical bytes.

use serde_json::{Map, Value};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    JsonLines,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "csv" => Some(Format::Csv),
            "jsonl" | "json" => Some(Format::JsonLines),
            _ => None,
        }
    }
}

/// One table cell.
#[derive(Debug, Clone)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn text(s: impl Into<String>) -> Cell {
        Cell::Text(s.into())
    }
}

/// 17 significant digits, locale-independent.
pub fn fmt_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if x.is_nan() {
        "nan".to_string()
    } else if x > 0.0 {
        "inf".to_string()
    } else {
        "-inf".to_string()
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Table {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width mismatch");
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => {
                out.write_all(self.columns.join(",").as_bytes())?;
                out.write_all(b"\n")?;
                for row in &self.rows {
                    let line: Vec<String> = row
                        .iter()
                        .map(|c| match c {
                            Cell::Float(x) => fmt_float(*x),
                            Cell::Int(i) => i.to_string(),
                            Cell::Text(s) => csv_escape(s),
                            Cell::Empty => String::new(),
                        })
                        .collect();
                    out.write_all(line.join(",").as_bytes())?;
                    out.write_all(b"\n")?;
                }
            }
            Format::JsonLines => {
                for row in &self.rows {
                    let mut obj = Map::new();
                    for (name, cell) in self.columns.iter().zip(row.iter()) {
                        let v = match cell {
                            // the string form keeps the 17-digit guarantee
                            Cell::Float(x) => Value::String(fmt_float(*x)),
                            Cell::Int(i) => Value::from(*i),
                            Cell::Text(s) => Value::String(s.clone()),
                            Cell::Empty => Value::Null,
                        };
                        obj.insert((*name).to_string(), v);
                    }
                    serde_json::to_writer(&mut *out, &Value::Object(obj))?;
                    out.write_all(b"\n")?;
                }
            }
        }
        Ok(())
    }
}
