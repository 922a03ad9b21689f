//! The `.imx` text format.
//!
//! ```text
//! # comment
//! 2 2
//! 1:2  0
//! -1/2 3:4
//! ```
//!
//! The first non-comment line holds `m n`; then `m` lines of `n` fields,
//! each `lo:hi` or a single rational. Vectors are `m x 1` files.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::interval_matrix::{IntervalMatrix, IntervalVector};
use crate::rational::Rational;

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Splits a line into whitespace-separated fields with 1-based columns.
fn fields(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn parse_field(text: &str, line: usize, column: usize) -> Result<Interval> {
    text.parse::<Interval>().map_err(|e| match e {
        Error::Parse { message, .. } => parse_err(line, column, message),
        Error::InvalidInterval { lo, hi } => {
            parse_err(line, column, format!("lower bound {lo} exceeds upper bound {hi}"))
        }
        other => parse_err(line, column, other.to_string()),
    })
}

pub fn parse_matrix(text: &str) -> Result<IntervalMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, 1, "missing `m n` header"))?;
    let hf = fields(header);
    if hf.len() != 2 {
        return Err(parse_err(hline, 1, "header must be `m n`"));
    }
    let dim = |(col, s): (usize, &str)| -> Result<usize> {
        match s.parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(parse_err(hline, col, format!("invalid dimension `{s}`"))),
        }
    };
    let m = dim(hf[0])?;
    let n = dim(hf[1])?;

    let mut data = Vec::with_capacity(m * n);
    for r in 0..m {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline + r + 1, 1, format!("expected {m} rows, found {r}")))?;
        let fs = fields(line);
        if fs.len() != n {
            let col = fs.get(n).map_or(line.len() + 1, |f| f.0);
            return Err(parse_err(lno, col, format!("expected {n} fields, found {}", fs.len())));
        }
        for (col, f) in fs {
            data.push(parse_field(f, lno, col)?);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(lno, 1, "unexpected content after the last row"));
    }
    IntervalMatrix::new(m, n, data)
}

pub fn emit_matrix(a: &IntervalMatrix) -> String {
    let mut out = format!("{} {}\n", a.rows(), a.cols());
    for i in 0..a.rows() {
        let row: Vec<String> = (0..a.cols()).map(|j| a[(i, j)].to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Parses an `m x 1` file as an interval vector.
pub fn parse_vector(text: &str) -> Result<IntervalVector> {
    let m = parse_matrix(text)?;
    if m.cols() != 1 {
        return Err(parse_err(1, 1, format!("vector file must have one column, found {}", m.cols())));
    }
    Ok(m.entries().iter().cloned().collect())
}

/// Parses an `m x 1` file of degenerate entries as a real vector.
pub fn parse_real_vector(text: &str) -> Result<Vec<Rational>> {
    let v = parse_vector(text)?;
    v.entries()
        .iter()
        .enumerate()
        .map(|(i, e)| {
            if e.is_degenerate() {
                Ok(e.lo().clone())
            } else {
                Err(parse_err(0, 0, format!("entry {} must be a single rational", i + 1)))
            }
        })
        .collect()
}

pub fn emit_vector(v: &IntervalVector) -> String {
    emit_matrix(&v.as_column())
}

pub fn emit_real_vector(x: &[Rational]) -> String {
    emit_vector(&IntervalVector::degenerate(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_both_field_forms() {
        let text = "# sample\n2 2\n-1:1 3\n\n# mid\n0:4  -2:0\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a.rows(), 2);
        assert_eq!(a[(0, 1)].to_string(), "3");
        assert_eq!(a[(1, 0)].to_string(), "0:4");
        assert_eq!(emit_matrix(&a), "2 2\n-1:1 3\n0:4 -2:0\n");
    }

    #[test]
    fn round_trip_is_exact() {
        let text = "2 3\n1/3:2/3 -7 0\n5/2 -1/9:0 4:4\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(parse_matrix(&emit_matrix(&a)).unwrap(), a);
    }

    #[test]
    fn errors_carry_positions() {
        match parse_matrix("1 2\n1 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        match parse_matrix("1 1\n3:1\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 1)),
            other => panic!("{other:?}"),
        }
        assert!(parse_matrix("2 1\n1\n").is_err());
        assert!(parse_matrix("1 1\n1\n2\n").is_err());
        assert!(parse_matrix("1 2\n1\n").is_err());
        assert!(parse_matrix("").is_err());
        assert!(parse_vector("1 2\n1 2\n").is_err());
    }

    #[test]
    fn real_vectors() {
        let x = parse_real_vector("2 1\n1/2\n-3\n").unwrap();
        assert_eq!(parse_real_vector(&emit_real_vector(&x)).unwrap(), x);
        assert!(parse_real_vector("1 1\n0:1\n").is_err());
    }
}
