//! Record types and their csv / json encodings. Exact values are always strings.

use serde::{Deserialize, Serialize};

use asm3_core::verify::Check;
use asm3_core::{OddTrigPoly, RefinedRow, UPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub n: usize,
    pub r: usize,
    pub count: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffRecord {
    pub degree: u32,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TotalRecord {
    pub n: usize,
    pub total: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub suite: String,
    pub case: String,
    pub status: String,
    pub detail: String,
}

pub fn row_records(row: &RefinedRow) -> impl Iterator<Item = CountRecord> + '_ {
    row.counts.iter().enumerate().map(|(i, c)| CountRecord {
        n: row.n,
        r: i + 1,
        count: c.to_string(),
    })
}

/// Every coefficient up to the degree, zeros included.
pub fn poly_records(p: &UPoly) -> Vec<CoeffRecord> {
    let len = p.degree().map_or(0, |d| d + 1);
    (0..len)
        .map(|i| CoeffRecord {
            degree: i as u32,
            coeff: p.coeff(i).to_string(),
        })
        .collect()
}

/// Nonzero sine coefficients keyed by frequency.
pub fn trig_records(f: &OddTrigPoly) -> Vec<CoeffRecord> {
    f.terms()
        .map(|(m, c)| CoeffRecord {
            degree: m,
            coeff: c.to_string(),
        })
        .collect()
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            suite: c.suite.to_string(),
            case: c.case.clone(),
            status: if c.passed { "pass" } else { "fail" }.into(),
            detail: c.detail.clone(),
        }
    }
}

/// A record with a fixed csv header.
pub trait Record: Serialize {
    const HEADER: &'static [&'static str];
}

impl Record for CountRecord {
    const HEADER: &'static [&'static str] = &["n", "r", "count"];
}

impl Record for CoeffRecord {
    const HEADER: &'static [&'static str] = &["degree", "coeff"];
}

impl Record for TotalRecord {
    const HEADER: &'static [&'static str] = &["n", "total"];
}

impl Record for CheckRecord {
    const HEADER: &'static [&'static str] = &["suite", "case", "status", "detail"];
}

pub fn render<T: Record>(records: &[T], format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(Vec::new());
            w.write_record(T::HEADER).expect("in-memory writer");
            for r in records {
                w.serialize(r).expect("records serialize");
            }
            String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 csv")
        }
    }
}
