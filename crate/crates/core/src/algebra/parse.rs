//! Recursive-descent parser for the polynomial text grammar:
//!
//! ```text
//! expr     := sign? term (('+'|'-') term)*
//! term     := factor ('*' factor)*
//! factor   := base ('^' nat)?
//! base     := rational | name | '(' expr ')'
//! rational := int ('/' nat)?
//! ```
//!
//! A leading sign is accepted at the start of every `expr` so that printed
//! polynomials with a negative leading coefficient parse back.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Expr {
    Num(Rational),
    Name(String, usize),
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
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
            let n: BigInt = text[start..i].parse().expect("digits");
            out.push((Tok::Int(n), start));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((Tok::Ident(text[start..i].to_string()), start));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(Error::Syntax { pos: i, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut parts = Vec::new();
        let mut positive = true;
        if self.eat('-') {
            positive = false;
        } else {
            self.eat('+');
        }
        parts.push((positive, self.term()?));
        loop {
            if self.eat('+') {
                parts.push((true, self.term()?));
            } else if self.eat('-') {
                parts.push((false, self.term()?));
            } else {
                break;
            }
        }
        if parts.len() == 1 && parts[0].0 {
            return Ok(parts.pop().unwrap().1);
        }
        Ok(Expr::Sum(parts))
    }

    fn term(&mut self) -> Result<Expr> {
        let mut factors = vec![self.factor()?];
        while self.eat('*') {
            factors.push(self.factor()?);
        }
        if factors.len() == 1 {
            return Ok(factors.pop().unwrap());
        }
        Ok(Expr::Product(factors))
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.base()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Int(n)) => {
                    self.at += 1;
                    let e: u32 = n.try_into().map_err(|_| Error::Syntax {
                        pos: self.pos(),
                        msg: "exponent too large".into(),
                    })?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return self.err("expected a natural-number exponent"),
            }
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                if self.eat('/') {
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.at += 1;
                            Ok(Expr::Num(Rational::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.err("zero denominator"),
                        _ => self.err("expected an integer denominator"),
                    }
                } else {
                    Ok(Expr::Num(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(s)) => {
                let p = self.pos();
                self.at += 1;
                Ok(Expr::Name(s, p))
            }
            Some(Tok::Sym('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

pub(crate) fn parse_expr(text: &str) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, at: 0, end: text.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Minimal ring interface used to evaluate parsed expressions.
pub(crate) trait EvalRing: Clone {
    fn lift_rational(&self, c: Rational) -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
}

pub(crate) fn eval<R, F>(e: &Expr, proto: &R, leaf: &F) -> Result<R>
where
    R: EvalRing,
    F: Fn(&str, usize) -> Result<R>,
{
    Ok(match e {
        Expr::Num(c) => proto.lift_rational(c.clone()),
        Expr::Name(n, p) => leaf(n, *p)?,
        Expr::Sum(parts) => {
            let mut acc = proto.lift_rational(Rational::zero());
            for (positive, t) in parts {
                let v = eval(t, proto, leaf)?;
                acc = if *positive { acc.add(&v) } else { acc.sub(&v) };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = proto.lift_rational(Rational::one());
            for f in fs {
                acc = acc.mul(&eval(f, proto, leaf)?);
            }
            acc
        }
        Expr::Pow(b, k) => {
            let base = eval(b, proto, leaf)?;
            let mut acc = proto.lift_rational(Rational::one());
            for _ in 0..*k {
                acc = acc.mul(&base);
            }
            acc
        }
    })
}

impl EvalRing for Poly {
    fn lift_rational(&self, c: Rational) -> Self {
        Poly::constant(self.nvars(), c)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
}

/// Parses `text` as a polynomial in the named variables (order significant).
pub fn parse_poly(text: &str, vars: &[impl AsRef<str>]) -> Result<Poly> {
    let n = vars.len();
    let e = parse_expr(text)?;
    let leaf = |name: &str, pos: usize| -> Result<Poly> {
        match vars.iter().position(|v| v.as_ref() == name) {
            Some(i) => Ok(Poly::var(n, i)),
            None => Err(Error::UnknownVariable { name: name.to_string(), pos }),
        }
    };
    eval(&e, &Poly::zero(n), &leaf)
}
