use clap::ValueEnum;
use serde_json::json;

use super::Outcome;
use crate::primality::{Method, PrimalityVerdict};
use crate::search::RowStatus;

/// Version of the JSON output record layout.
pub const OUTPUT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Tabular view of a command's results, plus the lines used for plain text.
#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    plain: Vec<String>,
}

impl Table {
    pub fn new<const N: usize>(header: [&str; N]) -> Self {
        Table {
            header: header.iter().map(ToString::to_string).collect(),
            ..Table::default()
        }
    }

    pub fn row<const N: usize>(mut self, cells: [String; N]) -> Self {
        self.rows.push(cells.to_vec());
        self
    }

    pub fn plain(mut self, lines: Vec<String>) -> Self {
        self.plain = lines;
        self
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let cells: Vec<String> = line.iter().map(|c| csv_field(c)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let mut out = self.plain.join("\n");
        out.push('\n');
        out
    }
}

fn csv_field(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

pub(super) fn render(format: Format, echo: &[String], out: &Outcome) -> String {
    match format {
        Format::Plain => out.table.to_plain(),
        Format::Csv => out.table.to_csv(),
        Format::Json => {
            let record = json!({
                "schema_version": OUTPUT_SCHEMA_VERSION,
                "tool": env!("CARGO_PKG_NAME"),
                "tool_version": env!("CARGO_PKG_VERSION"),
                "command": echo,
                "base": out.base,
                "family": out.family,
                "exit_code": out.code,
                "results": out.results,
                "notes": out.notes,
            });
            let mut text = serde_json::to_string_pretty(&record).expect("record serializes");
            text.push('\n');
            text
        }
    }
}

pub(super) fn method_label(v: &PrimalityVerdict) -> &'static str {
    match v.method {
        Method::TrialDivision => "trial division",
        Method::DeterministicMr => "deterministic Miller-Rabin",
        Method::Bpsw => "BPSW",
    }
}

pub(super) fn status_label(s: &RowStatus) -> &'static str {
    match s {
        RowStatus::Match => "match",
        RowStatus::Mismatch => "MISMATCH",
        RowStatus::OutOfScope => "out-of-scope",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        let t = Table::new(["a", "b"]).row(["1, 2".to_string(), "x\"y".to_string()]);
        assert_eq!(t.to_csv(), "a,b\n\"1, 2\",\"x\"\"y\"\n");
    }
}
