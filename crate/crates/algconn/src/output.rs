//! Report emission as JSON lines, CSV or an aligned text table.
//!
//! CSV and table rows are the JSON object flattened with dotted keys;
//! arrays of scalars are joined with `;`, other arrays are written as JSON.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub struct Emitter<W: Write> {
    format: Format,
    out: W,
    header: Option<Vec<String>>,
    table: Vec<Vec<String>>,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, out: W) -> Self {
        Emitter {
            format,
            out,
            header: None,
            table: Vec::new(),
        }
    }

    pub fn emit<T: Serialize>(&mut self, record: &T) -> io::Result<()> {
        let value = serde_json::to_value(record).map_err(io::Error::other)?;
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, &value).map_err(io::Error::other)?;
                writeln!(self.out)
            }
            Format::Csv | Format::Table => {
                let (keys, cells) = flatten(&value);
                let header = self.header.get_or_insert_with(|| keys.clone());
                let mut row = vec![String::new(); header.len()];
                for (k, c) in keys.into_iter().zip(cells) {
                    match header.iter().position(|h| *h == k) {
                        Some(i) => row[i] = c,
                        None => {
                            header.push(k);
                            row.push(c);
                        }
                    }
                }
                if self.format == Format::Csv {
                    if self.table.is_empty() {
                        self.table.push(header.clone());
                        self.write_csv_row(0)?;
                    }
                    self.table.push(row);
                    let last = self.table.len() - 1;
                    self.write_csv_row(last)
                } else {
                    self.table.push(row);
                    Ok(())
                }
            }
        }
    }

    fn write_csv_row(&mut self, i: usize) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(vec![]);
        w.write_record(&self.table[i]).map_err(io::Error::other)?;
        let bytes = w.into_inner().map_err(|e| io::Error::other(e.to_string()))?;
        self.out.write_all(&bytes)
    }

    /// Writes the table (table format only) and flushes.
    pub fn finish(mut self) -> io::Result<()> {
        if self.format == Format::Table {
            if let Some(header) = self.header.take() {
                let width = header.len();
                let mut rows = vec![header];
                rows.extend(self.table.drain(..).map(|mut r| {
                    r.resize(width.max(r.len()), String::new());
                    r
                }));
                let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
                let widths: Vec<usize> = (0..cols)
                    .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
                    .collect();
                for r in &rows {
                    let line: Vec<String> = r.iter().enumerate().map(|(c, s)| format!("{s:<w$}", w = widths[c])).collect();
                    writeln!(self.out, "{}", line.join("  ").trim_end())?;
                }
            }
        }
        self.out.flush()
    }
}

fn flatten(value: &Value) -> (Vec<String>, Vec<String>) {
    let mut keys = Vec::new();
    let mut cells = Vec::new();
    match value {
        Value::Object(map) => walk(map, "", &mut keys, &mut cells),
        other => {
            keys.push("value".to_owned());
            cells.push(cell(other));
        }
    }
    (keys, cells)
}

fn walk(map: &Map<String, Value>, prefix: &str, keys: &mut Vec<String>, cells: &mut Vec<String>) {
    for (k, v) in map {
        let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(inner) => walk(inner, &key, keys, cells),
            other => {
                keys.push(key);
                cells.push(cell(other));
            }
        }
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            items.iter().map(cell).collect::<Vec<_>>().join(";")
        }
        other => other.to_string(),
    }
}
