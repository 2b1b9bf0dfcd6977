//! Time series and their CSV form.

use std::io::{Read, Write};

use crate::error::{CliError, Result};

/// Rows of `(τ, columns…)`. The first header entry is always `tau`.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl TimeSeries {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        let mut header = vec!["tau".to_string()];
        header.extend(columns.into_iter().map(Into::into));
        Self { header, rows: Vec::new() }
    }

    /// Builds from a full header (including `tau`) and rows, checking shape
    /// and ordering.
    pub fn from_parts(header: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self> {
        if header.first().map(String::as_str) != Some("tau") {
            return Err(CliError::usage("first column must be tau"));
        }
        let mut s = Self { header, rows: Vec::with_capacity(rows.len()) };
        for row in rows {
            s.push(row)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.header.len() {
            return Err(CliError::usage(format!("row has {} values, header has {}", row.len(), self.header.len())));
        }
        if let Some(last) = self.rows.last() {
            if row[0].is_nan() || row[0] <= last[0] {
                return Err(CliError::usage(format!("tau not increasing at {}", row[0])));
            }
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.header.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[idx]).collect())
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|&v| format_c_exp(v)))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::Reader::from_reader(input);
        let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
        let mut rows = Vec::new();
        for rec in r.records() {
            let rec = rec?;
            let row = rec
                .iter()
                .map(|f| f.trim().parse::<f64>().map_err(|_| CliError::usage(format!("bad number {f:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_parts(header, rows)
    }
}

/// C `printf("%.12e")`: twelve fraction digits and an exponent with sign
/// and at least two digits.
pub fn format_c_exp(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let s = format!("{v:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}
