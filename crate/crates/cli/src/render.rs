use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// One result in all three output forms.
pub struct Rendered {
    pub plain: String,
    pub json: Value,
    pub csv_header: Vec<&'static str>,
    pub csv_rows: Vec<Vec<String>>,
}

impl Rendered {
    /// A single value: plain prints it alone, CSV as `key,value`.
    pub fn scalar(key: &'static str, value: String, json: Value) -> Self {
        Self {
            plain: value.clone(),
            json,
            csv_header: vec![key],
            csv_rows: vec![vec![value]],
        }
    }

    pub fn to_text(&self, format: Format, header: bool) -> String {
        match format {
            Format::Plain => self.plain.clone(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("values serialize"),
            Format::Csv => {
                let mut out = String::new();
                if header {
                    out.push_str(&self.csv_header.join(","));
                    out.push('\n');
                }
                for row in &self.csv_rows {
                    let _ = writeln!(out, "{}", row.join(","));
                }
                out.pop();
                out
            }
        }
    }
}
