use std::fmt;
use std::fs::File;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::{Corpus, HarnessError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            _ => Err(format!("unknown table format {s:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for TableFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableFormat::Csv => "csv",
            TableFormat::Json => "json",
        })
    }
}

/// One row of the `psi` table. The ratio `psi / psi_cn` is kept exact as a
/// reduced numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub label: String,
    pub order: u64,
    pub cyclic: bool,
    pub psi: u64,
    pub psi_cn: u128,
    pub ratio_num: u128,
    pub ratio_den: u128,
    pub solvable: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableSummary {
    pub rows: usize,
}

/// Rows for every corpus entry, sorted by `(order, label)`.
pub fn table_rows(corpus: &Corpus) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = corpus
        .entries()
        .iter()
        .map(|e| {
            let r = e.report();
            TableRow {
                label: e.label().to_string(),
                order: r.n,
                cyclic: r.cyclic,
                psi: r.psi,
                psi_cn: r.psi_cn,
                ratio_num: r.ratio.numer().to_u128().expect("ratio <= 1"),
                ratio_den: r
                    .ratio
                    .denom()
                    .to_u128()
                    .expect("denominator divides psi_cn"),
                solvable: e.group().is_solvable(),
            }
        })
        .collect();
    rows.sort_by(|a, b| (a.order, &a.label).cmp(&(b.order, &b.label)));
    rows
}

/// Writes the table to `out`. CSV has a header row; JSON is an array of
/// objects with the same fields. Output is byte-identical across runs.
pub fn write_table(
    corpus: &Corpus,
    format: TableFormat,
    mut out: impl Write,
) -> Result<TableSummary, HarnessError> {
    let rows = table_rows(corpus);
    match format {
        TableFormat::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(&mut out);
            w.write_record([
                "label",
                "order",
                "cyclic",
                "psi",
                "psi_cn",
                "ratio_num",
                "ratio_den",
                "solvable",
            ])?;
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &rows)?;
            out.write_all(b"\n")?;
        }
    }
    out.flush()?;
    Ok(TableSummary { rows: rows.len() })
}

/// [`write_table`] to a file path.
pub fn emit_table(
    corpus: &Corpus,
    format: TableFormat,
    destination: impl AsRef<Path>,
) -> Result<TableSummary, HarnessError> {
    let path = destination.as_ref();
    let io = |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io)?;
    write_table(corpus, format, std::io::BufWriter::new(file))
}
