//! Plain-text algebra files.
//!
//! ```text
//! # Heisenberg algebra
//! dim 3
//! name F3_1
//! bracket 1 2 3 1
//! ```
//!
//! `#` starts a comment. The first significant line is `dim <n>`; it is
//! followed by `bracket <i> <j> <s> <c>` lines meaning `C_ij^s = c`, with
//! `i < j` and `c` a nonzero integer or `a/b`, plus optional `name <text>`
//! and `basis <text>` metadata lines.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use lie_index_core::arith::Rational;
use lie_index_core::lie::StructureConstants;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraFile {
    pub algebra: StructureConstants,
    pub name: Option<String>,
    /// Note on the basis convention.
    pub basis: Option<String>,
}

/// A syntax or range error at a 1-based line and column.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push(Token { text: &line[s..pos], column: line[..s].chars().count() + 1 });
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// Text after the first token, trimmed.
fn rest_after<'a>(line: &'a str, first: &Token<'_>) -> &'a str {
    let start = line.char_indices().nth(first.column - 1).map_or(line.len(), |(b, _)| b) + first.text.len();
    line[start..].trim()
}

impl AlgebraFile {
    pub fn new(algebra: StructureConstants) -> Self {
        AlgebraFile { algebra, name: None, basis: None }
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut dim: Option<usize> = None;
        let mut name = None;
        let mut basis = None;
        let mut brackets: Vec<(usize, [Token<'_>; 4])> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("");
            let toks = tokens(line);
            let Some(first) = toks.first() else { continue };
            let err = |t: &Token<'_>, message: String| ParseError { line: line_no, column: t.column, message };
            if dim.is_none() {
                if first.text != "dim" {
                    return Err(err(first, format!("expected `dim <n>`, found `{}`", first.text)));
                }
                let [_, n] = toks.as_slice() else {
                    let at = toks.get(2).unwrap_or(first);
                    return Err(err(at, "expected exactly `dim <n>`".into()));
                };
                let d: usize = n.text.parse().map_err(|_| err(n, format!("bad dimension `{}`", n.text)))?;
                if d < 1 {
                    return Err(err(n, "dimension must be at least 1".into()));
                }
                dim = Some(d);
                continue;
            }
            match first.text {
                "dim" => return Err(err(first, "repeated `dim` line".into())),
                "name" | "basis" => {
                    let value = rest_after(line, first).to_string();
                    if value.is_empty() {
                        return Err(err(first, format!("`{}` needs a value", first.text)));
                    }
                    let slot = if first.text == "name" { &mut name } else { &mut basis };
                    if slot.replace(value).is_some() {
                        return Err(err(first, format!("repeated `{}` line", first.text)));
                    }
                }
                "bracket" => {
                    let mut it = toks.into_iter().skip(1);
                    let (Some(i), Some(j), Some(s), Some(c)) = (it.next(), it.next(), it.next(), it.next()) else {
                        return Err(ParseError {
                            line: line_no,
                            column: line.trim_end().chars().count() + 1,
                            message: "expected `bracket <i> <j> <s> <coeff>`".into(),
                        });
                    };
                    if let Some(extra) = it.next() {
                        return Err(err(&extra, format!("unexpected `{}`", extra.text)));
                    }
                    brackets.push((line_no, [i, j, s, c]));
                }
                other => return Err(err(first, format!("unknown directive `{other}`"))),
            }
        }
        let n = dim.ok_or(ParseError { line: text.lines().count().max(1), column: 1, message: "missing `dim` line".into() })?;
        let mut algebra = StructureConstants::new(n).expect("positive dimension");
        let mut seen = BTreeSet::new();
        for (line_no, [i, j, s, c]) in &brackets {
            let err = |t: &Token<'_>, message: String| ParseError { line: *line_no, column: t.column, message };
            let index = |t: &Token<'_>| -> Result<u32, ParseError> {
                let v: u32 = t.text.parse().map_err(|_| err(t, format!("bad index `{}`", t.text)))?;
                if v < 1 || v as usize > n {
                    return Err(err(t, format!("index {v} outside 1..={n}")));
                }
                Ok(v)
            };
            let (iv, jv, sv) = (index(i)?, index(j)?, index(s)?);
            if iv >= jv {
                return Err(err(i, format!("bracket indices must satisfy i < j, found {iv} >= {jv}")));
            }
            let coeff: Rational = c.text.parse().map_err(|_| err(c, format!("bad coefficient `{}`", c.text)))?;
            if coeff.is_zero() {
                return Err(err(c, "zero coefficient".into()));
            }
            if !seen.insert((iv, jv, sv)) {
                return Err(err(i, format!("duplicate bracket {iv} {jv} {sv}")));
            }
            algebra.add(iv, jv, sv, &coeff).expect("checked indices");
        }
        Ok(AlgebraFile { algebra, name, basis })
    }

    /// Canonical text: `dim`, metadata, then brackets sorted by `(i, j, s)`.
    pub fn emit(&self) -> String {
        let mut out = format!("dim {}\n", self.algebra.dim());
        if let Some(name) = &self.name {
            writeln!(out, "name {name}").unwrap();
        }
        if let Some(basis) = &self.basis {
            writeln!(out, "basis {basis}").unwrap();
        }
        for ((i, j, s), c) in self.algebra.entries() {
            writeln!(out, "bracket {i} {j} {s} {c}").unwrap();
        }
        out
    }
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}
