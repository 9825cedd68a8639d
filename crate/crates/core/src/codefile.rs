//! The plain-text code file format.
//!
//! Lines starting with `#` are comments. The first non-comment line is
//! `q <q> n <n>`; every following non-empty line is one codeword given as
//! whitespace-separated decimal symbols. Duplicate codewords are an error.

use crate::code::{Code, Word};
use crate::error::{Error, Result};
use std::fmt::Write as _;
use std::path::Path;

pub fn parse(text: &str) -> Result<Code> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty code file".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (q, n) = match tokens.as_slice() {
        ["q", q, "n", n] => (
            q.parse::<u32>().map_err(|e| Error::Parse(format!("bad q: {e}")))?,
            n.parse::<usize>().map_err(|e| Error::Parse(format!("bad n: {e}")))?,
        ),
        _ => {
            return Err(Error::Parse(format!(
                "expected header `q <q> n <n>`, got `{header}`"
            )))
        }
    };
    let mut words = Vec::new();
    for line in lines {
        let symbols = line
            .split_whitespace()
            .map(|t| t.parse::<u16>().map_err(|e| Error::Parse(format!("bad symbol `{t}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if symbols.len() != n {
            return Err(Error::Parse(format!(
                "codeword `{line}` has {} symbols, expected {n}",
                symbols.len()
            )));
        }
        words.push(Word::new(q, symbols)?);
    }
    Code::new(q, n, words)
}

pub fn read(path: &Path) -> Result<Code> {
    parse(&std::fs::read_to_string(path)?)
}

pub fn render(code: &Code) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "q {} n {}", code.q(), code.n());
    for w in code.words() {
        let row: Vec<String> = w.symbols().iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn write(code: &Code, path: &Path) -> Result<()> {
    std::fs::write(path, render(code))?;
    Ok(())
}
