//! The MLAT v1 interchange format and DOT export.
//!
//! ```text
//! MLAT 1
//! n <N>
//! names <N labels>          (optional line)
//! leq
//! <N rows of N tokens, 0 or 1; row i column j is 1 iff i <= j>
//! mul
//! <N rows of N tokens, each an element index in [0, N)>
//! ```
//!
//! Tokens are whitespace-separated ASCII decimals, element indices are
//! 0-based, and emitted files use LF line endings.

use thiserror::Error;

use crate::lattice::{FiniteLattice, LatticeError};
use crate::quantale::{validate_quantale, MultLattice, QuantaleError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum MlatError {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid lattice: {0}")]
    Lattice(#[from] LatticeError),
    #[error("invalid multiplication: {0}")]
    Quantale(#[from] QuantaleError),
}

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    s: &'a str,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Tok<'_>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let mut col = 0;
        for piece in line.split_whitespace() {
            let start = line[col..].find(piece).unwrap() + col;
            out.push(Tok { s: piece, line: ln + 1, col: start + 1 });
            col = start + piece.len();
        }
    }
    out
}

struct Cursor<'a> {
    toks: Vec<Tok<'a>>,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self, what: &str) -> Result<Tok<'a>, MlatError> {
        let t = self.toks.get(self.pos).copied().ok_or_else(|| {
            let (line, col) = self
                .toks
                .last()
                .map(|t| (t.line, t.col + t.s.len()))
                .unwrap_or((1, 1));
            MlatError::Parse { line, col, msg: format!("unexpected end of input, expected {what}") }
        })?;
        self.pos += 1;
        Ok(t)
    }

    fn expect(&mut self, literal: &str) -> Result<(), MlatError> {
        let t = self.next(literal)?;
        if t.s != literal {
            return Err(MlatError::Parse {
                line: t.line,
                col: t.col,
                msg: format!("expected `{literal}`, found `{}`", t.s),
            });
        }
        Ok(())
    }

    fn number(&mut self, what: &str) -> Result<(usize, Tok<'a>), MlatError> {
        let t = self.next(what)?;
        let v = t.s.parse::<usize>().map_err(|_| MlatError::Parse {
            line: t.line,
            col: t.col,
            msg: format!("expected {what}, found `{}`", t.s),
        })?;
        Ok((v, t))
    }
}

/// Parses MLAT text and validates the structure it encodes.
pub fn parse_mlat(text: &str) -> Result<MultLattice, MlatError> {
    let mut cur = Cursor { toks: tokenize(text), pos: 0 };
    cur.expect("MLAT")?;
    cur.expect("1")?;
    cur.expect("n")?;
    let (n, ntok) = cur.number("element count")?;
    if n == 0 {
        return Err(MlatError::Parse {
            line: ntok.line,
            col: ntok.col,
            msg: "element count must be at least 1".to_string(),
        });
    }

    let mut names = None;
    let peek = cur.next("`names`, `leq`")?;
    match peek.s {
        "names" => {
            let mut ns = Vec::with_capacity(n);
            for _ in 0..n {
                ns.push(cur.next("a name")?.s.to_string());
            }
            names = Some(ns);
            cur.expect("leq")?;
        }
        "leq" => {}
        other => {
            return Err(MlatError::Parse {
                line: peek.line,
                col: peek.col,
                msg: format!("expected `names` or `leq`, found `{other}`"),
            });
        }
    }

    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = Vec::with_capacity(n);
        for _ in 0..n {
            let (v, t) = cur.number("0 or 1")?;
            if v > 1 {
                return Err(MlatError::Parse {
                    line: t.line,
                    col: t.col,
                    msg: format!("relation entries must be 0 or 1, found `{v}`"),
                });
            }
            row.push(v == 1);
        }
        rows.push(row);
    }

    cur.expect("mul")?;
    let mut mul = Vec::with_capacity(n);
    for _ in 0..n {
        let mut row = Vec::with_capacity(n);
        for _ in 0..n {
            let (v, t) = cur.number("an element index")?;
            if v >= n {
                return Err(MlatError::Parse {
                    line: t.line,
                    col: t.col,
                    msg: format!("element index {v} out of range for n = {n}"),
                });
            }
            row.push(v);
        }
        mul.push(row);
    }

    if let Some(t) = cur.toks.get(cur.pos) {
        return Err(MlatError::Parse {
            line: t.line,
            col: t.col,
            msg: format!("trailing input `{}`", t.s),
        });
    }

    let lat = FiniteLattice::build(rows, names)?;
    Ok(validate_quantale(lat, &mul)?)
}

/// Emits the canonical MLAT text for a structure; `parse_mlat` of the result
/// reconstructs it exactly.
pub fn emit_mlat(m: &MultLattice) -> String {
    let n = m.n();
    let mut out = String::new();
    out.push_str("MLAT 1\n");
    out.push_str(&format!("n {n}\n"));
    if let Some(names) = m.lattice().names() {
        let sanitized: Vec<String> = names
            .iter()
            .map(|s| s.split_whitespace().collect::<Vec<_>>().join("_"))
            .collect();
        out.push_str(&format!("names {}\n", sanitized.join(" ")));
    }
    out.push_str("leq\n");
    for a in m.elements() {
        let row: Vec<&str> = m
            .elements()
            .map(|b| if m.leq(a, b) { "1" } else { "0" })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out.push_str("mul\n");
    for row in m.mul_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// DOT rendering of the Hasse diagram: one directed edge per cover, lower to
/// upper, labeled with element names or indices.
pub fn emit_dot(m: &MultLattice) -> String {
    let mut out = String::new();
    out.push_str("digraph mlat {\n");
    out.push_str("  rankdir=BT;\n");
    for e in m.elements() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", e.0, m.display_elt(e)));
    }
    for (lo, hi) in m.lattice().covers() {
        out.push_str(&format!("  n{} -> n{};\n", lo.0, hi.0));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::fixture;

    #[test]
    fn round_trip_on_fixtures() {
        for name in ["C2", "C3", "B2", "N4", "Z30"] {
            let m = fixture(name).unwrap();
            let text = emit_mlat(&m);
            let back = parse_mlat(&text).unwrap();
            assert_eq!(back, m, "{name}");
            assert_eq!(emit_mlat(&back), text, "{name}");
        }
    }

    #[test]
    fn out_of_range_mul_token_is_a_parse_error() {
        let text = "MLAT 1\nn 2\nleq\n1 1\n0 1\nmul\n0 0\n0 3\n";
        let err = parse_mlat(text).unwrap_err();
        match err {
            MlatError::Parse { line, col, .. } => {
                assert_eq!(line, 8);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_header_is_a_parse_error() {
        assert!(matches!(parse_mlat(""), Err(MlatError::Parse { .. })));
        assert!(matches!(parse_mlat("MLAT 2\n"), Err(MlatError::Parse { .. })));
        assert!(matches!(
            parse_mlat("MLAT 1\nn 0\nleq\nmul\n"),
            Err(MlatError::Parse { .. })
        ));
        let trailing = "MLAT 1\nn 1\nleq\n1\nmul\n0\nextra";
        assert!(matches!(parse_mlat(trailing), Err(MlatError::Parse { .. })));
    }

    #[test]
    fn axiom_violations_surface_as_validation_errors() {
        // three-chain with m*m = 1
        let text = "MLAT 1\nn 3\nleq\n1 1 1\n0 1 1\n0 0 1\nmul\n0 0 0\n0 2 1\n0 1 2\n";
        let err = parse_mlat(text).unwrap_err();
        assert!(matches!(err, MlatError::Quantale(_)));

        // relation that is not antisymmetric
        let text = "MLAT 1\nn 2\nleq\n1 1\n1 1\nmul\n0 0\n0 1\n";
        assert!(matches!(parse_mlat(text).unwrap_err(), MlatError::Lattice(_)));
    }

    #[test]
    fn dot_export_lists_cover_edges() {
        let dot = emit_dot(&fixture("N4").unwrap());
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("n2 -> n3;"));
        assert!(!dot.contains("n0 -> n2;")); // not a cover
        assert!(dot.contains("label=\"a\""));
    }
}
