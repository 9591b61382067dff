//! Point records in the three output formats.
//!
//! CSV and JSON share the column set
//! `n,pi,ratio,floor_k,theorem3,table_variant,theorem3_match`; absent values
//! are an empty CSV field and JSON `null`.

use std::io::{self, Read, Write};

use serde::{Deserialize, Serialize};

use crate::formula::GolombPoint;

pub const CSV_HEADER: &str = "n,pi,ratio,floor_k,theorem3,table_variant,theorem3_match";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub n: u64,
    pub pi: u64,
    pub ratio: u64,
    pub floor_k: u32,
    pub theorem3: Option<u64>,
    pub table_variant: u64,
    pub theorem3_match: Option<bool>,
}

impl From<&GolombPoint> for PointRecord {
    fn from(p: &GolombPoint) -> Self {
        PointRecord {
            n: p.n,
            pi: p.pi_n,
            ratio: p.k,
            floor_k: p.floor_val,
            theorem3: p.theorem3_val,
            table_variant: p.table_variant_val,
            theorem3_match: p.theorem3_match,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

/// Incremental writer so long scans can emit rows as pieces complete.
pub struct RecordWriter<W: Write> {
    out: W,
    format: Format,
    rows: usize,
}

impl<W: Write> RecordWriter<W> {
    pub fn begin(mut out: W, format: Format) -> io::Result<Self> {
        match format {
            Format::Csv => writeln!(out, "{CSV_HEADER}")?,
            Format::Json => write!(out, "[")?,
            Format::Table => writeln!(
                out,
                "{:>12} {:>10} {:>5} {:>7} {:>10} {:>13} {:>14}",
                "n", "pi", "ratio", "floor_k", "theorem3", "table_variant", "theorem3_match"
            )?,
        }
        Ok(RecordWriter {
            out,
            format,
            rows: 0,
        })
    }

    pub fn write(&mut self, r: &PointRecord) -> io::Result<()> {
        match self.format {
            Format::Csv => writeln!(
                self.out,
                "{},{},{},{},{},{},{}",
                r.n,
                r.pi,
                r.ratio,
                r.floor_k,
                opt(r.theorem3),
                r.table_variant,
                opt(r.theorem3_match)
            )?,
            Format::Json => {
                let sep = if self.rows == 0 { "\n  " } else { ",\n  " };
                write!(self.out, "{sep}")?;
                serde_json::to_writer(&mut self.out, r)?;
            }
            Format::Table => {
                let dash = |s: String| if s.is_empty() { "-".to_string() } else { s };
                writeln!(
                    self.out,
                    "{:>12} {:>10} {:>5} {:>7} {:>10} {:>13} {:>14}",
                    r.n,
                    r.pi,
                    r.ratio,
                    r.floor_k,
                    dash(opt(r.theorem3)),
                    r.table_variant,
                    dash(opt(r.theorem3_match))
                )?
            }
        }
        self.rows += 1;
        Ok(())
    }

    pub fn finish(mut self) -> io::Result<W> {
        if self.format == Format::Json {
            if self.rows > 0 {
                writeln!(self.out, "\n]")?;
            } else {
                writeln!(self.out, "]")?;
            }
        }
        self.out.flush()?;
        Ok(self.out)
    }
}

pub fn write_records<W: Write>(out: W, format: Format, records: &[PointRecord]) -> io::Result<W> {
    let mut w = RecordWriter::begin(out, format)?;
    for r in records {
        w.write(r)?;
    }
    w.finish()
}

pub fn read_csv_records(input: impl Read) -> csv::Result<Vec<PointRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

pub fn read_json_records(input: impl Read) -> serde_json::Result<Vec<PointRecord>> {
    serde_json::from_reader(input)
}
