//! Element and matrix text formats.
//!
//! Elements: `-12`, `3/4`, `2 + 1/2*x + 3*x^2 - x^3`, optionally followed by a
//! precision suffix `@16` (Henriksen ring only). Matrices: rows separated by
//! `;`, entries by `,`, or a JSON array of arrays of strings/numbers.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::instances::henriksen::HSeries;
use crate::instances::poly::Poly;
use crate::matrix::Matrix;
use crate::numbers::{Int, Rat};
use crate::ring::BezoutDomain;

/// Writes `c0 + c1*x + c2*x^2 ...`, skipping zero terms; `0` when all vanish.
pub(crate) fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (usize, Rat)>,
) -> fmt::Result {
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mag = c.abs();
        let unit_coeff = mag.is_one() && k > 0;
        if !unit_coeff {
            write!(f, "{mag}")?;
            if k > 0 {
                f.write_str("*")?;
            }
        }
        match k {
            0 => {}
            1 => f.write_str("x")?,
            _ => write!(f, "x^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Parsed element text: dense coefficients (index = power) and optional
/// precision suffix.
#[derive(Debug, Clone, PartialEq)]
pub struct Terms {
    pub dense: Vec<Rat>,
    pub precision: Option<usize>,
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Result<Int> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse::<Int>().expect("ascii digits parse"))
    }
}

pub fn parse_terms(text: &str) -> Result<Terms> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return Err(Error::parse(0, "empty element"));
    }
    let mut dense: Vec<Rat> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        if cur.eat(b'-') {
            negative = true;
        } else if cur.eat(b'+') {
            if first {
                return Err(Error::parse(cur.pos - 1, "unexpected `+`"));
            }
        } else if !first {
            break;
        }
        first = false;
        let (coef, power) = parse_term(&mut cur)?;
        let coef = if negative { -coef } else { coef };
        if dense.len() <= power {
            dense.resize(power + 1, Rat::zero());
        }
        dense[power] += coef;
        match cur.peek() {
            Some(b'+') | Some(b'-') => continue,
            _ => break,
        }
    }
    let precision = if cur.eat(b'@') {
        let at = cur.pos;
        let p = cur.digits()?;
        let p: usize = p
            .try_into()
            .map_err(|_| Error::parse(at, "precision out of range"))?;
        if p == 0 {
            return Err(Error::parse(at, "precision must be at least 1"));
        }
        Some(p)
    } else {
        None
    };
    if let Some(ch) = cur.peek() {
        return Err(Error::parse(cur.pos, format!("unexpected `{}`", ch as char)));
    }
    while dense.last().is_some_and(Zero::is_zero) {
        dense.pop();
    }
    Ok(Terms { dense, precision })
}

fn parse_term(cur: &mut Cursor<'_>) -> Result<(Rat, usize)> {
    match cur.peek() {
        Some(b'x') => Ok((Rat::one(), parse_power(cur)?)),
        Some(ch) if ch.is_ascii_digit() => {
            let num = cur.digits()?;
            let coef = if cur.eat(b'/') {
                let at = cur.pos;
                let den = cur.digits()?;
                if Zero::is_zero(&den) {
                    return Err(Error::parse(at, "zero denominator"));
                }
                Rat::new(num, den)
            } else {
                Rat::from_integer(num)
            };
            let starred = cur.eat(b'*');
            if cur.peek() == Some(b'x') {
                Ok((coef, parse_power(cur)?))
            } else if starred {
                Err(Error::parse(cur.pos, "expected `x` after `*`"))
            } else {
                Ok((coef, 0))
            }
        }
        Some(ch) => Err(Error::parse(cur.pos, format!("unexpected `{}`", ch as char))),
        None => Err(Error::parse(cur.pos, "expected a term")),
    }
}

fn parse_power(cur: &mut Cursor<'_>) -> Result<usize> {
    assert!(cur.eat(b'x'));
    if cur.eat(b'^') {
        let at = cur.pos;
        let k = cur.digits()?;
        k.try_into().map_err(|_| Error::parse(at, "exponent out of range"))
    } else {
        Ok(1)
    }
}

/// Ring-specific interpretation of the element grammar.
pub trait ElementGrammar: BezoutDomain + Sized {
    /// Parse with the given default working precision (ignored outside H).
    fn parse_with(text: &str, precision: usize) -> Result<Self>;
}

impl ElementGrammar for Int {
    fn parse_with(text: &str, _precision: usize) -> Result<Self> {
        let terms = parse_terms(text)?;
        if terms.precision.is_some() {
            return Err(Error::PrecisionFlagInvalid);
        }
        match terms.dense.as_slice() {
            [] => Ok(Int::zero()),
            [c] if c.is_integer() => Ok(c.to_integer()),
            [_] => Err(Error::parse(0, "expected an integer")),
            _ => Err(Error::parse(0, "`x` is not an element of Z")),
        }
    }
}

impl ElementGrammar for Poly {
    fn parse_with(text: &str, _precision: usize) -> Result<Self> {
        let terms = parse_terms(text)?;
        if terms.precision.is_some() {
            return Err(Error::PrecisionFlagInvalid);
        }
        Ok(Poly::new(terms.dense))
    }
}

impl ElementGrammar for HSeries {
    fn parse_with(text: &str, precision: usize) -> Result<Self> {
        let terms = parse_terms(text)?;
        HSeries::from_dense(&terms.dense, terms.precision.unwrap_or(precision))
    }
}

/// Parse a matrix in the `;`/`,` text form or as a JSON array of arrays.
pub fn parse_matrix<R: ElementGrammar>(text: &str, precision: usize) -> Result<Matrix<R>> {
    let trimmed = text.trim();
    let rows: Vec<Vec<String>> = if trimmed.starts_with('[') {
        let raw: Vec<Vec<serde_json::Value>> = serde_json::from_str(trimmed)
            .map_err(|e| Error::parse(e.column().saturating_sub(1), e.to_string()))?;
        raw.into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|v| match v {
                        serde_json::Value::String(s) => s,
                        other => other.to_string(),
                    })
                    .collect()
            })
            .collect()
    } else {
        trimmed
            .split(';')
            .map(|row| row.split(',').map(str::to_owned).collect())
            .collect()
    };
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for entry in row {
            out.push(R::parse_with(&entry, precision)?);
        }
        parsed.push(out);
    }
    Matrix::from_rows(parsed)
}
