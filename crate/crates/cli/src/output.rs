//! Deterministic table output: CSV as the primary artifact, JSON mirroring
//! it with a metadata header.

use crate::config::{OutputFormat, RunConfig};
use std::io::Write;
use std::time::{SystemTime, UNIX_EPOCH};

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON mirror: `meta` carries run information a byte-stable
    /// comparison is free to ignore; `columns`/`rows` mirror the CSV.
    pub fn to_json(&self, command: &str, config: &RunConfig) -> String {
        let timestamp = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let meta = serde_json::json!({
            "tool": "dynquant",
            "version": env!("CARGO_PKG_VERSION"),
            "command": command,
            "seed": config.seed,
            "tolerance": config.tolerance,
            "generated_at_unix": timestamp,
        });
        let body = serde_json::json!({
            "meta": meta,
            "columns": self.columns,
            "rows": self.rows,
        });
        serde_json::to_string_pretty(&body).expect("table serialization cannot fail")
    }

    pub fn write(&self, command: &str, config: &RunConfig) -> std::io::Result<()> {
        let text = match config.format {
            OutputFormat::Csv => self.to_csv(),
            OutputFormat::Json => self.to_json(command, config),
        };
        match &config.out {
            Some(path) => std::fs::write(path, text),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes())
            }
        }
    }
}

/// Fixed-precision scientific formatting keeps the CSV byte-stable.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.12e}")
}

pub fn fmt_grids(grids: &[usize]) -> String {
    grids
        .iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join("|")
}
