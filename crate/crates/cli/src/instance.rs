//! Plain-text instance files.
//!
//! ```text
//! # optional comments
//! k=3
//! 0 0 1
//! 1.5 2 2
//! 3 -1 3
//! ```

use std::fmt::Write as _;

use annulus_core::{ColoredPoint, PointSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing header line `k=<int>`")]
    MissingHeader,
    #[error(transparent)]
    Invalid(#[from] annulus_core::Error),
}

fn at(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<PointSet, ParseError> {
    let mut k = None;
    let mut points = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line = no + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if k.is_none() {
            let v = body
                .strip_prefix("k=")
                .ok_or_else(|| at(line, format!("expected `k=<int>`, found `{body}`")))?;
            k = Some(
                v.trim()
                    .parse::<u32>()
                    .map_err(|e| at(line, format!("bad color count: {e}")))?,
            );
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(at(
                line,
                format!("expected `x y color`, found {} fields", fields.len()),
            ));
        }
        let x: f64 = fields[0]
            .parse()
            .map_err(|_| at(line, format!("bad x coordinate `{}`", fields[0])))?;
        let y: f64 = fields[1]
            .parse()
            .map_err(|_| at(line, format!("bad y coordinate `{}`", fields[1])))?;
        let c: u32 = fields[2]
            .parse()
            .map_err(|_| at(line, format!("bad color `{}`", fields[2])))?;
        points.push(ColoredPoint::new(x, y, c));
    }
    let k = k.ok_or(ParseError::MissingHeader)?;
    Ok(PointSet::new(points, k)?)
}

/// Inverse of [`parse`]: floats are written in shortest round-trip form.
pub fn serialize(ps: &PointSet) -> String {
    let mut out = format!("k={}\n", ps.k());
    for p in ps.points() {
        let _ = writeln!(out, "{} {} {}", p.x, p.y, p.color);
    }
    out
}
