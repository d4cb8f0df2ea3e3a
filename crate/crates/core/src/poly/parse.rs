use num_bigint::BigInt;

use super::polynomial::{Polynomial, Ring};
use super::vars::VariableSet;
use crate::error::{Error, Result};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(char, usize),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let b = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Num(text[s..i].parse().expect("digits")), s));
        } else if matches!(c, 'x' | 'y' | 'u' | 'v') {
            let s = i;
            i += 1;
            let d = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            if d == i {
                return Err(Error::Syntax { position: s, message: format!("variable `{c}` needs an index") });
            }
            let idx = text[d..i]
                .parse()
                .map_err(|_| Error::Syntax { position: s, message: "variable index too large".into() })?;
            out.push((Tok::Var(c, idx), s));
        } else if matches!(c, '+' | '-' | '*' | '/' | '^' | '(' | ')') {
            out.push((Tok::Op(c), i));
            i += 1;
        } else if c.is_alphabetic() {
            let s = i;
            while i < b.len() && (b[i] as char).is_alphanumeric() {
                i += 1;
            }
            return Err(Error::UnknownVariable(text[s..i].to_string()));
        } else {
            return Err(Error::Syntax { position: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    vars: &'a VariableSet,
    ring: Option<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { position: self.here(), message: message.to_string() })
    }

    fn n(&self) -> usize {
        self.vars.count()
    }

    fn konst(&self, c: Scalar) -> Polynomial {
        Polynomial::constant(Ring::Primal, self.n(), c)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(Ring::Primal, self.n());
        let mut sign = match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                -1
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(Tok::Op('+')) => sign = 1,
                Some(Tok::Op('-')) => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = acc.mul(&f);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let at = self.here();
                    let f = self.power()?;
                    let c = match f.terms() {
                        [(m, c)] if m.is_one() => c.clone(),
                        _ => {
                            return Err(Error::Syntax {
                                position: at,
                                message: "division only by nonzero constants".into(),
                            })
                        }
                    };
                    acc = acc.scale(&c.recip());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(e)) => {
                    self.pos += 1;
                    let e: u32 = e.try_into().map_err(|_| Error::Syntax {
                        position: self.here(),
                        message: "exponent too large".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => self.err("expected an exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.pos += 1;
                Ok(self.konst(Scalar::from_integer(v)))
            }
            Some(Tok::Var(c, i)) => {
                let Some((idx, dual)) = self.vars.resolve(c, i) else {
                    return Err(Error::UnknownVariable(format!("{c}{i}")));
                };
                let ring = if dual { Ring::Dual } else { Ring::Primal };
                match self.ring {
                    Some(r) if r != ring => {
                        return Err(Error::RingMismatch(format!("`{c}{i}` mixes primal and dual variables")))
                    }
                    _ => self.ring = Some(ring),
                }
                self.pos += 1;
                Ok(Polynomial::var(Ring::Primal, self.n(), idx))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::Op(')')) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            _ => self.err("expected a term"),
        }
    }
}

/// Parses a polynomial; the ring is read off the variable letters (`y` dual, `x`/`u`/`v` primal).
pub fn parse_poly(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len(), vars, ring: None };
    if p.toks.is_empty() {
        return p.err("empty input");
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected token");
    }
    Ok(e.with_ring(p.ring.unwrap_or(Ring::Primal)))
}

/// Parses a dual-ring polynomial; constants are accepted.
pub fn parse_dual(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let p = parse_poly(text, vars)?;
    if p.ring() == Ring::Primal && p.terms().iter().any(|(m, _)| !m.is_one()) {
        return Err(Error::RingMismatch("expected y-variables".into()));
    }
    Ok(p.with_ring(Ring::Dual))
}
