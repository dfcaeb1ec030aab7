//! Infix parser for free-algebra elements.
//!
//! Grammar: sums and differences of products; factors are rational literals
//! (`3`, `2/5`), variable names, parenthesised expressions, optionally raised
//! to a non-negative integer power. Products are ordered (noncommutative).

use crate::coeff::{self, Coeff};
use crate::error::{Error, Result};
use crate::poly::{FreeElement, Word};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: &'a [String],
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse(format!("{msg} at column {} in `{}`", self.pos + 1, self.src)))
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn expr(&mut self) -> Result<FreeElement> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.bump();
                self.term()?.scale(&-coeff::one())
            }
            Some('+') => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FreeElement> {
        let mut acc = self.power()?;
        while let Some('*') = self.peek() {
            self.bump();
            acc = acc.mul(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<FreeElement> {
        let base = self.atom()?;
        if let Some('^') = self.peek() {
            self.bump();
            self.skip_ws();
            let k = self.integer()?;
            let k: u32 = k.parse().map_err(|_| Error::Parse(format!("bad exponent `{k}`")))?;
            let mut acc = FreeElement::constant(coeff::one());
            for _ in 0..k {
                acc = acc.mul(&base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<String> {
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_ascii_digit() {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        Ok(self.src[start..self.pos].to_string())
    }

    fn atom(&mut self) -> Result<FreeElement> {
        match self.peek() {
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected `)`");
                }
                self.bump();
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let save = self.pos;
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    if self.src[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
                        let den = self.integer()?;
                        let c = coeff::parse(&format!("{num}/{den}"))?;
                        return Ok(FreeElement::constant(c));
                    }
                    self.pos = save;
                    return self.err("expected a denominator");
                }
                let c: Coeff = coeff::parse(&num)?;
                Ok(FreeElement::constant(c))
            }
            Some(c) if is_ident_start(c) => {
                let start = self.pos;
                while let Some(c) = self.src[self.pos..].chars().next() {
                    if is_ident_char(c) {
                        self.pos += c.len_utf8();
                    } else {
                        break;
                    }
                }
                let name = &self.src[start..self.pos];
                match self.names.iter().position(|n| n == name) {
                    Some(i) => Ok(FreeElement::word(Word::letter(i), 0)),
                    None => {
                        self.pos = start;
                        self.err(&format!("unknown variable `{name}`"))
                    }
                }
            }
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parse an infix expression over the given variable names.
pub fn parse_free(src: &str, names: &[String]) -> Result<FreeElement> {
    let mut p = Parser { src, pos: 0, names };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}
