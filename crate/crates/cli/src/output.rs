//! Rendering of report batches as JSON, CSV or plain text.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One unit of command output.
pub trait Record: Serialize {
    fn pass(&self) -> bool;

    fn text(&self) -> String;

    /// Flat CSV rows as `(column, value)` pairs. The default flattens the
    /// top-level JSON object, encoding nested values as JSON text.
    fn csv_rows(&self) -> Vec<Vec<(String, String)>> {
        let value = serde_json::to_value(self).expect("reports serialize");
        let Value::Object(map) = value else {
            return vec![vec![("value".into(), value.to_string())]];
        };
        vec![map
            .into_iter()
            .map(|(k, v)| {
                let cell = match v {
                    Value::String(s) => s,
                    Value::Null => String::new(),
                    other => other.to_string(),
                };
                (k, cell)
            })
            .collect()]
    }
}

pub fn render<R: Record>(records: &[R], format: Format) -> Result<Vec<u8>, String> {
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, records).map_err(|e| e.to_string())?;
            buf.push(b'\n');
        }
        Format::Text => {
            for r in records {
                writeln!(buf, "{}", r.text()).map_err(|e| e.to_string())?;
            }
        }
        Format::Csv => {
            let rows: Vec<_> = records.iter().flat_map(Record::csv_rows).collect();
            let mut header: Vec<String> = Vec::new();
            for row in &rows {
                for (k, _) in row {
                    if !header.contains(k) {
                        header.push(k.clone());
                    }
                }
            }
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(&header).map_err(|e| e.to_string())?;
            for row in &rows {
                let cells = header.iter().map(|h| {
                    row.iter().find(|(k, _)| k == h).map(|(_, v)| v.as_str()).unwrap_or("")
                });
                w.write_record(cells).map_err(|e| e.to_string())?;
            }
            w.flush().map_err(|e| e.to_string())?;
        }
    }
    Ok(buf)
}

/// Serializes `value` into CSV cells through its JSON form.
pub fn cells_of<T: Serialize>(value: &T) -> Vec<(String, String)> {
    match serde_json::to_value(value).expect("rows serialize") {
        Value::Object(map) => map
            .into_iter()
            .map(|(k, v)| {
                let cell = match v {
                    Value::String(s) => s,
                    other => other.to_string(),
                };
                (k, cell)
            })
            .collect(),
        other => vec![("value".into(), other.to_string())],
    }
}
