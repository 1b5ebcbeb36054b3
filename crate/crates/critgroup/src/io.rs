//! Text file formats for matrices and multigraphs. Entries are decimal
//! strings, so round trips are exact; there is no binary or floating-point
//! representation anywhere.
//!
//! Matrix files:
//!
//! ```text
//! rows 2
//! cols 3
//! entries
//! 1 -2 3
//! 0 5 80
//! ```
//!
//! Graph files carry the vertex count, an optional sink line, and the
//! multiplicity matrix:
//!
//! ```text
//! vertices 3
//! sink 2
//! multiplicity
//! 0 1 0
//! 1 0 2
//! 0 2 0
//! ```

use crate::exactlin::IntMatrix;
use crate::graphs::Multigraph;
use num_bigint::BigInt;
use std::fmt::Write as _;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("malformed field `{field}`: {detail}")]
    Malformed { field: String, detail: String },
}

fn malformed(field: &str, detail: impl Into<String>) -> FormatError {
    FormatError::Malformed { field: field.to_string(), detail: detail.into() }
}

struct Tokens<'a> {
    iter: std::str::SplitWhitespace<'a>,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        Tokens { iter: text.split_whitespace() }
    }

    fn keyword(&mut self, expect: &str) -> Result<(), FormatError> {
        match self.iter.next() {
            Some(t) if t == expect => Ok(()),
            Some(t) => Err(malformed(expect, format!("expected keyword `{expect}`, found `{t}`"))),
            None => Err(malformed(expect, "unexpected end of file")),
        }
    }

    fn count(&mut self, field: &str) -> Result<usize, FormatError> {
        let t = self.iter.next().ok_or_else(|| malformed(field, "missing value"))?;
        let v: usize =
            t.parse().map_err(|_| malformed(field, format!("`{t}` is not a count")))?;
        if v == 0 {
            return Err(malformed(field, "must be >= 1"));
        }
        Ok(v)
    }

    fn bigint(&mut self, field: &str) -> Result<BigInt, FormatError> {
        let t = self.iter.next().ok_or_else(|| malformed(field, "missing entry"))?;
        t.parse().map_err(|_| malformed(field, format!("`{t}` is not a decimal integer")))
    }

    fn finished(&mut self, field: &str) -> Result<(), FormatError> {
        match self.iter.next() {
            None => Ok(()),
            Some(t) => Err(malformed(field, format!("trailing token `{t}`"))),
        }
    }
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, FormatError> {
    let mut tok = Tokens::new(text);
    tok.keyword("rows")?;
    let rows = tok.count("rows")?;
    tok.keyword("cols")?;
    let cols = tok.count("cols")?;
    tok.keyword("entries")?;
    let mut entries = Vec::with_capacity(rows * cols);
    for i in 0..rows * cols {
        entries.push(tok.bigint(&format!("entries[{i}]"))?);
    }
    tok.finished("entries")?;
    Ok(IntMatrix::new(rows, cols, entries))
}

pub fn format_matrix(m: &IntMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "rows {}", m.rows()).unwrap();
    writeln!(out, "cols {}", m.cols()).unwrap();
    writeln!(out, "entries").unwrap();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m[(i, j)].to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn read_matrix(path: impl AsRef<Path>) -> Result<IntMatrix, FormatError> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn write_matrix(path: impl AsRef<Path>, m: &IntMatrix) -> Result<(), FormatError> {
    Ok(std::fs::write(path, format_matrix(m))?)
}

pub fn parse_graph(text: &str) -> Result<Multigraph, FormatError> {
    let mut tok = Tokens::new(text);
    tok.keyword("vertices")?;
    let n = tok.count("vertices")?;

    // optional sink line before the multiplicity block
    let mut sink = None;
    let next = tok.iter.next();
    match next {
        Some("sink") => {
            let t = tok.iter.next().ok_or_else(|| malformed("sink", "missing value"))?;
            let s: usize =
                t.parse().map_err(|_| malformed("sink", format!("`{t}` is not a vertex id")))?;
            sink = Some(s);
            tok.keyword("multiplicity")?;
        }
        Some("multiplicity") => {}
        Some(t) => {
            return Err(malformed("multiplicity", format!("expected keyword, found `{t}`")))
        }
        None => return Err(malformed("multiplicity", "unexpected end of file")),
    }

    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n * n {
        let field = format!("multiplicity[{i}]");
        let t = tok.iter.next().ok_or_else(|| malformed(&field, "missing entry"))?;
        let v: u64 = t
            .parse()
            .map_err(|_| malformed(&field, format!("`{t}` is not a nonnegative integer")))?;
        mult.push(v);
    }
    tok.finished("multiplicity")?;
    Multigraph::from_multiplicity(n, mult, sink)
        .map_err(|e| malformed("multiplicity", e.to_string()))
}

pub fn format_graph(g: &Multigraph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    writeln!(out, "vertices {n}").unwrap();
    if let Some(s) = g.sink() {
        writeln!(out, "sink {s}").unwrap();
    }
    writeln!(out, "multiplicity").unwrap();
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| g.multiplicity(i, j).to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

pub fn read_graph(path: impl AsRef<Path>) -> Result<Multigraph, FormatError> {
    parse_graph(&std::fs::read_to_string(path)?)
}

pub fn write_graph(path: impl AsRef<Path>, g: &Multigraph) -> Result<(), FormatError> {
    Ok(std::fs::write(path, format_graph(g))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::cycle;
    use proptest::prelude::*;

    #[test]
    fn matrix_round_trip_and_diagnostics() {
        let m = IntMatrix::from_i64(2, 3, &[1, -2, 3, 0, 5, 80]);
        let text = format_matrix(&m);
        assert_eq!(parse_matrix(&text).unwrap(), m);

        let err = parse_matrix("rows 2\ncols x\nentries\n1 2 3 4").unwrap_err();
        assert!(err.to_string().contains("cols"), "{err}");
        let err = parse_matrix("rows 2\ncols 2\nentries\n1 2 3").unwrap_err();
        assert!(err.to_string().contains("entries[3]"), "{err}");
        let err = parse_matrix("rows 2\ncols 2\nentries\n1 2 3 4 5").unwrap_err();
        assert!(err.to_string().contains("trailing"), "{err}");
    }

    #[test]
    fn graph_round_trip() {
        let g = cycle(5).unwrap().duplicate(2).unwrap().cone(3);
        let text = format_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);

        let sinkless = cycle(4).unwrap();
        assert_eq!(parse_graph(&format_graph(&sinkless)).unwrap(), sinkless);

        let err = parse_graph("vertices 2\nmultiplicity\n0 1\n2 0").unwrap_err();
        assert!(err.to_string().contains("symmetric"), "{err}");
    }

    proptest! {
        #[test]
        fn matrix_text_round_trips(rows in 1usize..5, cols in 1usize..5, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-1000i64..=1000)));
            prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
        }
    }
}
