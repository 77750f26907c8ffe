//! Text format for bicomplex matrices.
//!
//! One row per line, entries separated by commas, `#` starts a comment,
//! blank lines are skipped. An entry is a signed sum of terms:
//!
//! ```text
//! entry := ['+'|'-'] term (('+'|'-') term)*
//! term  := coeff unit? | unit
//! unit  := 'i1' | 'i2' | 'i1i2' | 'e1' | 'e2'
//! coeff := int | int '/' posint
//! ```
//!
//! with `e1 = 1/2 + 1/2·i1i2` and `e2 = 1/2 − 1/2·i1i2`.

use std::fmt;
use std::path::PathBuf;

use bicomplex_rank::{Bicomplex, BicomplexMatrix, Rational};
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

/// A parsed matrix together with where each entry came from.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixDocument {
    pub source: Option<PathBuf>,
    pub matrix: BicomplexMatrix,
    /// 1-based `(line, column)` of each entry, row-major.
    pub positions: Vec<(usize, usize)>,
}

pub fn parse_matrix(text: &str) -> Result<MatrixDocument, ParseError> {
    let mut rows: Vec<Vec<Bicomplex>> = Vec::new();
    let mut positions = Vec::new();
    let mut width: Option<(usize, usize)> = None;
    for (lineno, raw) in text.lines().enumerate().map(|(i, l)| (i + 1, l)) {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut offset = 0;
        for field in line.split(',') {
            let lead = field.len() - field.trim_start().len();
            let column = line[..offset + lead].chars().count() + 1;
            let entry = parse_entry_at(field.trim(), lineno, column)?;
            row.push(entry);
            positions.push((lineno, column));
            offset += field.len() + 1;
        }
        match width {
            None => width = Some((row.len(), lineno)),
            Some((w, first)) if w != row.len() => {
                return Err(ParseError {
                    line: lineno,
                    column: 1,
                    message: format!("row has {} entries but line {first} has {w}", row.len()),
                })
            }
            Some(_) => {}
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError { line: 1, column: 1, message: "expected at least one row".into() });
    }
    Ok(MatrixDocument { source: None, matrix: BicomplexMatrix::from_rows(rows), positions })
}

/// Parses a single entry, reporting positions as if it were line 1.
pub fn parse_entry(text: &str) -> Result<Bicomplex, ParseError> {
    let lead = text.len() - text.trim_start().len();
    parse_entry_at(text.trim(), 1, lead + 1)
}

fn parse_entry_at(text: &str, line: usize, column: usize) -> Result<Bicomplex, ParseError> {
    let mut p = EntryParser { src: text.as_bytes(), pos: 0, line, column };
    p.entry()
}

struct EntryParser<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl EntryParser<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        let consumed = String::from_utf8_lossy(&self.src[..self.pos]).chars().count();
        ParseError { line: self.line, column: self.column + consumed, message: message.into() }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ' | b'\t' | b'\r')) {
            self.pos += 1;
        }
    }

    fn entry(&mut self) -> Result<Bicomplex, ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            return Err(self.error("expected an entry"));
        }
        let mut total = Bicomplex::zero();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            self.skip_ws();
            let term = self.term()?;
            total = if negative { &total - &term } else { &total + &term };
            self.skip_ws();
            match self.peek() {
                None => return Ok(total),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return Err(self.error("expected '+', '-', ',' or end of line")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Bicomplex, ParseError> {
        let coeff = if self.peek().is_some_and(|c| c.is_ascii_digit()) { Some(self.coeff()?) } else { None };
        self.skip_ws();
        let unit = self.unit();
        match (coeff, unit) {
            (None, None) => Err(self.error("expected a number or one of i1, i2, i1i2, e1, e2")),
            (Some(c), None) => Ok(Bicomplex::from_coeffs(c, Rational::zero(), Rational::zero(), Rational::zero())),
            (c, Some(u)) => {
                let c = c.unwrap_or_else(Rational::one);
                let [a, b, x, y] = u.coeffs();
                Ok(Bicomplex::from_coeffs(&c * a, &c * b, &c * x, &c * y))
            }
        }
    }

    fn integer(&mut self) -> Result<num_bigint::BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn coeff(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        self.skip_ws();
        if self.peek() != Some(b'/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        self.skip_ws();
        let den = self.integer()?;
        if den.is_zero() {
            return Err(self.error("denominator must be positive"));
        }
        Ok(Rational::new(num, den))
    }

    fn unit(&mut self) -> Option<Bicomplex> {
        const UNITS: [&str; 5] = ["i1i2", "i1", "i2", "e1", "e2"];
        let rest = &self.src[self.pos..];
        let name = UNITS.iter().find(|u| rest.starts_with(u.as_bytes()))?;
        self.pos += name.len();
        Some(match *name {
            "i1i2" => Bicomplex::j(),
            "i1" => Bicomplex::i1(),
            "i2" => Bicomplex::i2(),
            "e1" => Bicomplex::e1(),
            _ => Bicomplex::e2(),
        })
    }
}

/// Canonical text form: one row per line, entries in `u₁+u₂i1+u₃i2+u₄i1i2`
/// form separated by `", "`.
pub fn serialize_matrix(m: &BicomplexMatrix) -> String {
    m.to_string()
}
