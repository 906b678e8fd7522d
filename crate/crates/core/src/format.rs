//! The `.pent` base-block listing.
//!
//! ```text
//! # optional comment lines
//! k r w d
//! b1 b2 ... bk
//! ...
//! ```
//!
//! Every data line is space separated with single spaces, the file ends in a
//! newline and `v` is never stored. Any number of base blocks is accepted;
//! short orbits make the count differ from `d r / k`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::Point;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseBlockFile {
    pub k: usize,
    pub r: usize,
    pub w: usize,
    /// Development step.
    pub d: usize,
    pub blocks: Vec<Vec<Point>>,
}

impl BaseBlockFile {
    pub fn v(&self) -> usize {
        (self.k.saturating_sub(1)) * self.r + self.w + 1
    }
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_fields(text: &str, lineno: usize) -> Result<Vec<u64>> {
    text.split(' ')
        .map(|tok| {
            if tok.is_empty() {
                return Err(syntax(lineno, "fields must be separated by single spaces"));
            }
            if !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(lineno, format!("`{tok}` is not a base-10 integer")));
            }
            tok.parse::<u64>()
                .map_err(|_| syntax(lineno, format!("`{tok}` is too large")))
        })
        .collect()
}

pub fn parse_pent_file(text: &str) -> Result<BaseBlockFile> {
    if text.is_empty() {
        return Err(syntax(1, "empty input"));
    }
    if !text.ends_with('\n') {
        let last = text.lines().count();
        return Err(syntax(last, "missing trailing newline"));
    }

    let mut header: Option<[usize; 4]> = None;
    let mut blocks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        if raw.starts_with('#') {
            continue;
        }
        let fields = parse_fields(raw, lineno)?;
        match header {
            None => {
                let [k, r, w, d]: [u64; 4] = fields.as_slice().try_into().map_err(|_| {
                    syntax(
                        lineno,
                        format!("header needs `k r w d`, found {} fields", fields.len()),
                    )
                })?;
                if d == 0 {
                    return Err(syntax(lineno, "development step d must be positive"));
                }
                header = Some([k, r, w, d].map(|x| x as usize));
            }
            Some([k, ..]) => {
                if fields.len() != k {
                    return Err(Error::ArityMismatch {
                        line: lineno,
                        expected: k,
                        found: fields.len(),
                    });
                }
                let block = fields
                    .into_iter()
                    .map(|x| {
                        Point::try_from(x).map_err(|_| syntax(lineno, format!("{x} is too large")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                blocks.push(block);
            }
        }
    }

    let [k, r, w, d] = header.ok_or_else(|| syntax(1, "no header line"))?;
    if blocks.is_empty() {
        return Err(syntax(text.lines().count(), "no base blocks"));
    }
    Ok(BaseBlockFile { k, r, w, d, blocks })
}

pub fn write_pent_file(file: &BaseBlockFile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {} {}", file.k, file.r, file.w, file.d);
    for block in &file.blocks {
        let row: Vec<String> = block.iter().map(|p| p.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
