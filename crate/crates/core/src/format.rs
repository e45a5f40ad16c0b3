//! Text format for witness certificates.
//!
//! ```text
//! biramsey-witness v1
//! m=2 n=3 t=2
//! 1: 1 2
//! 2:
//! # optional comment lines
//! ```
//!
//! Row and column labels are 1-based. Serialization is canonical: rows in
//! index order, columns ascending, LF line endings, no comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::witness::{verify_good_coloring, WitnessCertificate};

pub const WITNESS_MAGIC: &str = "biramsey-witness v1";

pub fn serialize_witness(cert: &WitnessCertificate) -> String {
    let g = &cert.graph;
    let mut out = String::new();
    let _ = writeln!(out, "{WITNESS_MAGIC}");
    let _ = writeln!(out, "m={} n={} t={}", g.m(), g.n(), cert.t);
    for (i, row) in g.rows().iter().enumerate() {
        let _ = write!(out, "{}:", i + 1);
        for c in row.iter() {
            let _ = write!(out, " {}", c + 1);
        }
        out.push('\n');
    }
    out
}

fn parse_dims(line: &str, lineno: usize) -> Result<(usize, usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut take = |key: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(lineno, format!("missing {key}=")))?;
        field
            .strip_prefix(key)
            .and_then(|v| v.strip_prefix('='))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| Error::parse(lineno, format!("expected {key}=<int>, got {field:?}")))
    };
    let dims = (take("m")?, take("n")?, take("t")?);
    if fields.next().is_some() {
        return Err(Error::parse(lineno, "trailing fields after t="));
    }
    Ok(dims)
}

/// Parses a witness file and re-verifies the coloring it holds.
pub fn parse_witness(text: &str) -> Result<WitnessCertificate> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));

    match lines.next() {
        Some((_, l)) if l.trim_end() == WITNESS_MAGIC => {}
        Some((k, l)) => {
            return Err(Error::parse(
                k,
                format!("expected header {WITNESS_MAGIC:?}, got {l:?}"),
            ))
        }
        None => return Err(Error::parse(1, "empty witness file")),
    }
    let (m, n, t) = match lines.next() {
        Some((k, l)) => parse_dims(l, k)?,
        None => return Err(Error::parse(2, "missing dimension line")),
    };
    if m == 0 || n == 0 || t == 0 {
        return Err(Error::parse(2, "m, n and t must be positive"));
    }

    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(m);
    let mut last_line = 2;
    for (k, line) in lines {
        last_line = k;
        let line = line.trim_end();
        if line.starts_with('#') || line.is_empty() {
            continue;
        }
        if rows.len() == m {
            return Err(Error::parse(k, format!("more than m={m} rows")));
        }
        let (label, cols) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(k, "expected \"<row>: <columns>\""))?;
        let expect = rows.len() + 1;
        if label.trim().parse::<usize>().ok() != Some(expect) {
            return Err(Error::parse(
                k,
                format!("expected row label {expect}, got {:?}", label.trim()),
            ));
        }
        let mut row = Vec::new();
        for tok in cols.split_whitespace() {
            let c: usize = tok
                .parse()
                .map_err(|_| Error::parse(k, format!("bad column label {tok:?}")))?;
            if c == 0 || c > n {
                return Err(Error::parse(k, format!("column {c} out of range 1..={n}")));
            }
            match row.last() {
                Some(&prev) if prev == c - 1 => {
                    return Err(Error::parse(k, format!("duplicate column {c}")));
                }
                Some(&prev) if prev > c - 1 => {
                    return Err(Error::parse(k, format!("columns not ascending at {c}")));
                }
                _ => row.push(c - 1),
            }
        }
        rows.push(row);
    }
    if rows.len() != m {
        return Err(Error::parse(
            last_line,
            format!("expected {m} rows, found {}", rows.len()),
        ));
    }
    let graph = BipartiteGraph::from_rows(n, &rows).map_err(|e| Error::parse(2, e.to_string()))?;
    verify_good_coloring(&graph, t)
}
