//! The plain-text groupoid file format.
//!
//! ```text
//! # optional comments
//! elements: 0 1 a b
//! zero: 0
//! table:
//! 0 0 a a
//! 1 0 a a
//! a a 0 0
//! b a 1 0
//! ```
//!
//! `elements:` fixes the index order, `zero:` is optional and rows are left
//! operands. Blank lines and `#` comments are allowed anywhere.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Labels that merely spell out the indices are dropped, so an unlabelled
/// groupoid survives a round trip unchanged.
fn index_labels(labels: &[String]) -> bool {
    labels.iter().enumerate().all(|(i, l)| *l == i.to_string())
}

pub fn parse(text: &str) -> Result<Groupoid> {
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut zero: Option<(usize, String)> = None;
    let mut table_line: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if table_line.is_some() {
            let n = index.len();
            if rows.len() == n {
                return Err(Error::parse(line_no, "unexpected content after the table"));
            }
            let row =
                line.split_whitespace()
                    .map(|tok| {
                        index.get(tok).copied().ok_or_else(|| {
                            Error::parse(line_no, format!("unknown element {tok:?}"))
                        })
                    })
                    .collect::<Result<Vec<usize>>>()?;
            if row.len() != n {
                return Err(Error::parse(
                    line_no,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| {
            Error::parse(line_no, format!("expected `key: value`, found {line:?}"))
        })?;
        match key.trim() {
            "elements" => {
                if elements.is_some() {
                    return Err(Error::parse(line_no, "duplicate `elements:` line"));
                }
                let labels: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if labels.is_empty() {
                    return Err(Error::parse(line_no, "no elements declared"));
                }
                elements = Some((line_no, labels));
            }
            "zero" => {
                if zero.is_some() {
                    return Err(Error::parse(line_no, "duplicate `zero:` line"));
                }
                let mut toks = value.split_whitespace();
                match (toks.next(), toks.next()) {
                    (Some(z), None) => zero = Some((line_no, z.to_string())),
                    _ => return Err(Error::parse(line_no, "`zero:` takes exactly one element")),
                }
            }
            "table" => {
                if !value.trim().is_empty() {
                    return Err(Error::parse(line_no, "table rows start on the next line"));
                }
                let Some((el_line, labels)) = &elements else {
                    return Err(Error::parse(line_no, "`table:` before `elements:`"));
                };
                for (k, l) in labels.iter().enumerate() {
                    if index.insert(l.clone(), k).is_some() {
                        return Err(Error::parse(*el_line, format!("duplicate element {l:?}")));
                    }
                }
                table_line = Some(line_no);
            }
            other => return Err(Error::parse(line_no, format!("unknown key {other:?}"))),
        }
    }

    let last = text.lines().count().max(1);
    let Some((el_line, labels)) = elements.clone() else {
        return Err(Error::parse(last, "missing `elements:` line"));
    };
    if table_line.is_none() {
        return Err(Error::parse(last, "missing `table:` section"));
    }
    let n = labels.len();
    if rows.len() != n {
        return Err(Error::parse(
            last,
            format!("table has {} rows, expected {n}", rows.len()),
        ));
    }
    let zero = match zero {
        None => None,
        Some((line, z)) => Some(
            labels
                .iter()
                .position(|l| *l == z)
                .ok_or_else(|| Error::parse(line, format!("zero {z:?} is not an element")))?,
        ),
    };
    let labels = (!index_labels(&labels)).then_some(labels);
    Groupoid::new(n, &rows, labels, zero).map_err(|e| match e {
        Error::BadLabels(m) => Error::parse(el_line, m),
        other => other,
    })
}

pub fn serialize(g: &Groupoid) -> String {
    let n = g.order();
    let names: Vec<String> = (0..n).map(|x| g.label(x)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "elements: {}", names.join(" "));
    if let Some(z) = g.zero() {
        let _ = writeln!(out, "zero: {}", names[z]);
    }
    out.push_str("table:\n");
    for row in g.rows() {
        let cells: Vec<&str> = row.iter().map(|&v| names[v].as_str()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
