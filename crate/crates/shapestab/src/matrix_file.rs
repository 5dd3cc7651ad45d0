//! Matrix files.
//!
//! ```text
//! ring: Z        # or GF2
//! dim: 3
//! 0 0 0
//! 0 0 1
//! 1 0 0
//! ```
//!
//! Column `j` holds the image of generator `j`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use shapestab_core::{Matrix, Ring};

use crate::problem::strip_comment;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixSyntaxError {
    #[error("missing `ring:` line")]
    MissingRing,
    #[error("unknown ring `{0}` (expected Z or GF2)")]
    UnknownRing(String),
    #[error("missing `dim:` line")]
    MissingDim,
    #[error("invalid dimension `{0}`")]
    BadDim(String),
    #[error("duplicate `{0}` line")]
    DuplicateDirective(&'static str),
    #[error("invalid entry `{0}`")]
    BadEntry(String),
    #[error("expected {expected} entries in this row, found {found}")]
    RowLength { expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("GF2 entries must be 0 or 1")]
    Gf2Entry,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {kind}")]
pub struct MatrixParseError {
    pub line: usize,
    pub kind: MatrixSyntaxError,
}

pub fn parse_matrix(text: &str) -> Result<Matrix, MatrixParseError> {
    let mut ring = None;
    let mut dim: Option<usize> = None;
    let mut entries: Vec<BigInt> = Vec::new();
    let mut rows = 0;
    let mut last_line = 1;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let err = |kind| MatrixParseError { line, kind };
        let code = strip_comment(raw);
        if code.is_empty() {
            continue;
        }
        if let Some(rest) = code.strip_prefix("ring:") {
            if ring.is_some() {
                return Err(err(MatrixSyntaxError::DuplicateDirective("ring:")));
            }
            ring = Some(match rest.trim() {
                "Z" => Ring::Z,
                "GF2" => Ring::Gf2,
                other => return Err(err(MatrixSyntaxError::UnknownRing(other.to_string()))),
            });
            continue;
        }
        if let Some(rest) = code.strip_prefix("dim:") {
            if dim.is_some() {
                return Err(err(MatrixSyntaxError::DuplicateDirective("dim:")));
            }
            let d = rest
                .trim()
                .parse::<usize>()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| err(MatrixSyntaxError::BadDim(rest.trim().to_string())))?;
            dim = Some(d);
            continue;
        }
        let r = ring.ok_or_else(|| err(MatrixSyntaxError::MissingRing))?;
        let d = dim.ok_or_else(|| err(MatrixSyntaxError::MissingDim))?;
        if rows == d {
            return Err(err(MatrixSyntaxError::RowCount {
                expected: d,
                found: d + 1,
            }));
        }
        let row = code
            .split_whitespace()
            .map(|t| {
                t.parse::<BigInt>()
                    .map_err(|_| err(MatrixSyntaxError::BadEntry(t.to_string())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != d {
            return Err(err(MatrixSyntaxError::RowLength {
                expected: d,
                found: row.len(),
            }));
        }
        if r == Ring::Gf2 && row.iter().any(|e| *e != BigInt::from(0) && *e != BigInt::from(1)) {
            return Err(err(MatrixSyntaxError::Gf2Entry));
        }
        entries.extend(row);
        rows += 1;
    }
    let at_end = |kind| MatrixParseError {
        line: last_line,
        kind,
    };
    let ring = ring.ok_or_else(|| at_end(MatrixSyntaxError::MissingRing))?;
    let dim = dim.ok_or_else(|| at_end(MatrixSyntaxError::MissingDim))?;
    if rows != dim {
        return Err(at_end(MatrixSyntaxError::RowCount {
            expected: dim,
            found: rows,
        }));
    }
    Ok(Matrix::new(ring, dim, entries).expect("shape and entries validated"))
}

pub fn to_text(m: &Matrix) -> String {
    let mut out = format!("ring: {}\ndim: {}\n", m.ring(), m.dim());
    for i in 0..m.dim() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
