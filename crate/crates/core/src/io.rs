//! Table files.
//!
//! Plain text: one row per line, whitespace-separated 1-based entries,
//! `#` starts a comment. A quandle is `n x n`; a biquandle is the
//! `2n x 2n` block matrix `[[B1, B2], [B3, B4]]`.
//!
//! JSON: `{"n": 4, "matrix": [[..], ..]}` for a quandle, or
//! `{"n": 3, "b1": .., "b2": .., "b3": .., "b4": ..}` for a biquandle.
//!
//! The kind is always given by the caller, never guessed from the shape.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{BiquandleTable, Kind, QuandleTable, Table};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuandleJson {
    n: usize,
    matrix: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BiquandleJson {
    n: usize,
    b1: Vec<Vec<usize>>,
    b2: Vec<Vec<usize>>,
    b3: Vec<Vec<usize>>,
    b4: Vec<Vec<usize>>,
}

fn parse_rows(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for tok in body.split_inclusive(char::is_whitespace) {
            let word = tok.trim();
            if !word.is_empty() {
                let v = word.parse::<usize>().map_err(|_| {
                    Error::parse(i + 1, col, format!("`{word}` is not a nonnegative integer"))
                })?;
                row.push(v);
            }
            col += tok.chars().count();
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(Error::Structure("table file has no rows".into()));
    }
    Ok(rows)
}

fn json_error(e: serde_json::Error) -> Error {
    Error::parse(e.line(), e.column(), e.to_string())
}

fn check_n(declared: usize, actual: usize) -> Result<()> {
    if declared != actual {
        return Err(Error::Structure(format!(
            "declared n = {declared} but the table has {actual} rows"
        )));
    }
    Ok(())
}

/// Parses a table of the given kind from text or JSON.
pub fn parse_table(text: &str, kind: Kind) -> Result<Table> {
    let json = text.trim_start().starts_with('{');
    match (kind, json) {
        (Kind::Quandle, false) => Ok(QuandleTable::from_rows(parse_rows(text)?)?.into()),
        (Kind::Biquandle, false) => Ok(BiquandleTable::from_block_matrix(parse_rows(text)?)?.into()),
        (Kind::Quandle, true) => {
            let doc: QuandleJson = serde_json::from_str(text).map_err(json_error)?;
            check_n(doc.n, doc.matrix.len())?;
            Ok(QuandleTable::from_rows(doc.matrix)?.into())
        }
        (Kind::Biquandle, true) => {
            let doc: BiquandleJson = serde_json::from_str(text).map_err(json_error)?;
            check_n(doc.n, doc.b1.len())?;
            Ok(BiquandleTable::from_blocks([doc.b1, doc.b2, doc.b3, doc.b4])?.into())
        }
    }
}

pub fn read_table(path: impl AsRef<Path>, kind: Kind) -> Result<Table> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parameter(format!("cannot read {}: {e}", path.display())))?;
    parse_table(&text, kind)
}

pub fn table_to_json(t: &Table) -> String {
    match t {
        Table::Quandle(q) => serde_json::to_string(&QuandleJson {
            n: q.rows().len(),
            matrix: q.rows(),
        }),
        Table::Biquandle(b) => serde_json::to_string(&BiquandleJson {
            n: b.block(1).len(),
            b1: b.block(1),
            b2: b.block(2),
            b3: b.block(3),
            b4: b.block(4),
        }),
    }
    .expect("plain data serializes")
}
