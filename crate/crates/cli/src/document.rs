//! On-disk formats: JSON `SquareDocument`, CSV grids and the pretty grid.

use std::fmt;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};
use sams_core::{Square, SumProfile};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sums {
    pub row_sums: Vec<u64>,
    pub col_sums: Vec<u64>,
    pub left_diag: u64,
    pub right_diag: u64,
}

impl From<SumProfile> for Sums {
    fn from(p: SumProfile) -> Self {
        Sums { row_sums: p.row_sums, col_sums: p.col_sums, left_diag: p.left_diag, right_diag: p.right_diag }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDocument {
    pub n: usize,
    pub d: usize,
    pub provenance: String,
    /// Row-major, length `n*n`.
    pub cells: Vec<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sums: Option<Sums>,
}

impl SquareDocument {
    pub fn new(square: &Square, d: usize, provenance: impl fmt::Display) -> Self {
        SquareDocument {
            n: square.order(),
            d,
            provenance: provenance.to_string(),
            cells: square.cells().to_vec(),
            sums: Some(square.sum_profile().into()),
        }
    }

    /// Rebuilds the square, rejecting embedded sums that disagree with the
    /// cells.
    pub fn square(&self) -> Result<Square> {
        let sq = Square::from_cells(self.n, self.cells.clone())?;
        if let Some(sums) = &self.sums {
            let actual = Sums::from(sq.sum_profile());
            if *sums != actual {
                bail!("embedded sums do not match the cells: recorded {sums:?}, recomputed {actual:?}");
            }
        }
        Ok(sq)
    }
}

/// A square read from disk; `d` is known only for JSON input.
pub struct Loaded {
    pub square: Square,
    pub d: Option<usize>,
}

pub fn parse(text: &str) -> Result<Loaded> {
    if text.trim_start().starts_with('{') {
        let doc: SquareDocument = serde_json::from_str(text).context("invalid square document")?;
        return Ok(Loaded { square: doc.square()?, d: Some(doc.d) });
    }
    Ok(Loaded { square: parse_csv(text)?, d: None })
}

/// `n` lines of `n` comma-separated integers.
pub fn parse_csv(text: &str) -> Result<Square> {
    let mut rows = Vec::new();
    for (k, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .enumerate()
            .map(|(c, field)| {
                u64::from_str(field.trim()).map_err(|e| anyhow!("line {}, field {}: {e}: {field:?}", k + 1, c + 1))
            })
            .collect::<Result<Vec<u64>>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        bail!("no rows");
    }
    if rows.len() != rows[0].len() {
        bail!("{} rows of width {}: not a square", rows.len(), rows[0].len());
    }
    Square::from_rows(&rows).context("malformed grid")
}

pub fn to_csv(square: &Square) -> String {
    let mut out = String::new();
    for row in square.rows() {
        let line: Vec<String> = row.iter().map(u64::to_string).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn render(square: &Square, d: usize, provenance: impl fmt::Display, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string(&SquareDocument::new(square, d, provenance))?;
            s.push('\n');
            s
        }
        Format::Csv => to_csv(square),
        Format::Pretty => square.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use sams_core::fixtures;

    #[test]
    fn json_round_trip() {
        let sq = fixtures::sams_5_2();
        let text = render(&sq, 2, "hardcoded", Format::Json).unwrap();
        let back = parse(&text).unwrap();
        assert_eq!(back.square, sq);
        assert_eq!(back.d, Some(2));
        assert!(text.find("\"n\"").unwrap() < text.find("\"cells\"").unwrap());
    }

    #[test]
    fn tampered_sums_are_rejected() {
        let mut doc = SquareDocument::new(&fixtures::sams_5_2(), 2, "hardcoded");
        doc.sums.as_mut().unwrap().left_diag += 1;
        assert!(doc.square().is_err());
        doc.sums = None;
        assert!(doc.square().is_ok());
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let sq = fixtures::w_7();
        assert_eq!(parse_csv(&to_csv(&sq)).unwrap(), sq);
        assert!(parse_csv("1,2\n3").is_err());
        assert!(parse_csv("1,x\n3,4").unwrap_err().to_string().contains("line 1, field 2"));
        assert!(parse_csv("").is_err());
    }
}
