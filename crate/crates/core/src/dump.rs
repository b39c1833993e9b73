//! A plain-text format for labelled matrices, one block per map:
//!
//! ```text
//! matrix nabla : 2 x 2
//! 1 0
//! 0 1/2
//! end
//! ```
//!
//! Rows are written top to bottom, entries as integers or `p/q`.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linmap::LinMap;
use crate::scalar::Scalar;

pub fn render_matrix<T: Scalar>(name: &str, m: &LinMap<T>) -> String {
    let mut out = format!("matrix {name} : {} x {}\n", m.cod(), m.dom());
    for row in m.to_rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out.push_str("end\n");
    out
}

pub fn render_dump<'n, 'm, T: Scalar + 'm>(blocks: impl IntoIterator<Item = (&'n str, &'m LinMap<T>)>) -> String {
    let mut out = String::new();
    for (name, m) in blocks {
        let _ = write!(out, "{}", render_matrix(name, m));
    }
    out
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: &str, no: usize) -> Result<(String, usize, usize)> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    match toks.as_slice() {
        ["matrix", name, ":", r, "x", c] => {
            let r = r.parse().map_err(|_| parse_err(no, format!("bad row count {r}")))?;
            let c = c.parse().map_err(|_| parse_err(no, format!("bad column count {c}")))?;
            Ok((name.to_string(), r, c))
        }
        _ => Err(parse_err(no, "expected `matrix NAME : ROWS x COLS`")),
    }
}

/// Parses every block of a dump, in order.
pub fn parse_dump<T: Scalar + FromStr>(text: &str) -> Result<Vec<(String, LinMap<T>)>> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut out = Vec::new();
    while let Some((no, line)) = lines.next() {
        if line.trim().is_empty() {
            continue;
        }
        let (name, r, c) = parse_header(line, no)?;
        let mut rows = Vec::with_capacity(r);
        for _ in 0..r {
            let (rn, row) = lines.next().ok_or_else(|| parse_err(no, format!("block {name} ends early")))?;
            let cells: Vec<T> = row
                .split_whitespace()
                .map(|t| t.parse::<T>().map_err(|_| parse_err(rn, format!("bad entry {t}"))))
                .collect::<Result<_>>()?;
            if cells.len() != c {
                return Err(parse_err(rn, format!("expected {c} entries, found {}", cells.len())));
            }
            rows.push(cells);
        }
        match lines.next() {
            Some((_, l)) if l.trim() == "end" => {}
            Some((en, _)) => return Err(parse_err(en, format!("expected `end` after block {name}"))),
            None => return Err(parse_err(no, format!("block {name} is not closed"))),
        }
        out.push((name, LinMap::from_rows_with_dom(rows, c)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn fractions_and_empty_shapes_roundtrip() {
        let m = LinMap::from_rows(vec![
            vec![Rational::from_integer(1.into()), Rational::new((-1).into(), 2.into())],
            vec![Rational::from_integer(0.into()), Rational::new(3.into(), 7.into())],
        ])
        .unwrap();
        let z = LinMap::<Rational>::zero(0, 3);
        let u = LinMap::<Rational>::zero(2, 0);
        let text = render_dump([("m", &m), ("z", &z), ("u", &u)]);
        assert!(text.contains("\n1 -1/2\n0 3/7\n"));
        let back = parse_dump::<Rational>(&text).unwrap();
        assert_eq!(back, vec![("m".to_string(), m), ("z".to_string(), z), ("u".to_string(), u)]);
    }

    #[test]
    fn malformed_blocks_name_the_line() {
        let err = parse_dump::<Rational>("matrix a : 1 x 2\n1 2 3\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_dump::<Rational>("matrix a : 1 x 1\n1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_dump::<Rational>("matrix a : 1 x 1\nx\nend\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
