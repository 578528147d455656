//! Recursive-descent parser for the polynomial text format.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := rational | 'i' | variable | '(' expr ')'
//! rational := integer ['i'] ('/' natural)?
//! ```
//!
//! Whitespace is ignored and there is no implicit multiplication, except that
//! an integer literal may carry an `i` suffix (`3i`). A leading sign is
//! accepted so that printed polynomials parse back.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeff::GaussianRational;
use super::context::Ctx;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int { value: BigInt, imag: bool },
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let value: BigInt = text[start..i].parse().expect("digits");
            let mut imag = false;
            if i < bytes.len() && bytes[i] == b'i' {
                let next = bytes.get(i + 1).copied();
                if !matches!(next, Some(b) if b.is_ascii_alphanumeric() || b == b'_') {
                    imag = true;
                    i += 1;
                }
            }
            if i < bytes.len() && (bytes[i].is_ascii_alphabetic() || bytes[i] == b'_') {
                return Err(Error::Syntax {
                    pos: i,
                    msg: "implicit multiplication is not allowed; use `*`".into(),
                });
            }
            out.push((start, Tok::Int { value, imag }));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Syntax {
                pos: i,
                msg: format!("unexpected character {c:?}"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Ctx,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut negate = false;
        if self.eat('-') {
            negate = true;
        } else {
            self.eat('+');
        }
        let first = self.term()?;
        let mut acc = if negate { -first } else { first };
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.base()?;
        if self.eat('^') {
            let e = self.natural()?;
            let e: u32 = u32::try_from(&e)
                .ok()
                .filter(|&e| e <= u16::MAX as u32)
                .ok_or(Error::Syntax {
                    pos: self.offset(),
                    msg: "exponent too large".into(),
                })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn natural(&mut self) -> Result<BigInt> {
        match self.peek().cloned() {
            Some(Tok::Int { value, imag: false }) => {
                self.pos += 1;
                Ok(value)
            }
            _ => self.err("expected a natural number"),
        }
    }

    fn base(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Int { value, imag }) => {
                self.pos += 1;
                let mut r = BigRational::from_integer(value);
                if self.eat('/') {
                    let d = self.natural()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    r /= BigRational::from_integer(d);
                }
                let c = if imag {
                    GaussianRational::new(BigRational::zero(), r)
                } else {
                    GaussianRational::real(r)
                };
                Ok(Polynomial::constant(self.ctx, c))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if name == "i" {
                    return Ok(Polynomial::constant(
                        self.ctx,
                        GaussianRational::new(BigRational::zero(), BigRational::one()),
                    ));
                }
                match self.ctx.index_of(&name) {
                    Some(idx) => Ok(Polynomial::var(self.ctx, idx)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses `text` into a polynomial over `ctx`.
pub fn parse_polynomial(text: &str, ctx: &Ctx) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
        ctx,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(poly)
}

/// Parses a constant such as `"1/2"`, `"-3"` or `"1/2+3/4*i"`.
pub fn parse_constant(text: &str) -> Result<GaussianRational> {
    let ctx = super::context::VariableContext::new::<&str>(&[])?;
    let p = parse_polynomial(text, &ctx)?;
    p.as_constant()
        .ok_or_else(|| Error::Input(format!("`{text}` is not a constant")))
}
