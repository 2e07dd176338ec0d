//! A small expression language for polynomials on curves.
//!
//! Grammar: sums and differences of products, where factors may be
//! juxtaposed (`3x(1 + x^3)`), raised to integer powers, or divided by a
//! factor. Atoms are rational literals, parenthesised expressions, `x`,
//! `y`, `l0`..`l4` (also `λ0`..`λ4`) and `psiN` (also `ψN`).

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Sym(String),
    Psi(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Something an [`Expr`] can be evaluated into.
pub trait ExprContext {
    type Value: Clone;

    fn num(&self, c: &Rational) -> Self::Value;
    fn sym(&self, name: &str) -> Result<Self::Value>;
    fn psi(&self, _n: i64) -> Result<Self::Value> {
        Err(Error::InvalidArgument(
            "psi references are not available here".into(),
        ))
    }
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn div(&self, a: &Self::Value, b: &Self::Value) -> Result<Self::Value>;
}

impl Expr {
    pub fn eval<C: ExprContext>(&self, ctx: &C) -> Result<C::Value> {
        Ok(match self {
            Expr::Num(c) => ctx.num(c),
            Expr::Sym(s) => ctx.sym(s)?,
            Expr::Psi(n) => ctx.psi(*n)?,
            Expr::Neg(a) => ctx.neg(&a.eval(ctx)?),
            Expr::Add(a, b) => ctx.add(&a.eval(ctx)?, &b.eval(ctx)?),
            Expr::Sub(a, b) => ctx.sub(&a.eval(ctx)?, &b.eval(ctx)?),
            Expr::Mul(a, b) => ctx.mul(&a.eval(ctx)?, &b.eval(ctx)?),
            Expr::Div(a, b) => ctx.div(&a.eval(ctx)?, &b.eval(ctx)?)?,
            Expr::Pow(a, e) => {
                let base = a.eval(ctx)?;
                let mut acc = ctx.num(&Rational::one());
                for _ in 0..*e {
                    acc = ctx.mul(&acc, &base);
                }
                acc
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let err = |d: String| Error::Parse {
        what: "expression",
        detail: d,
    };
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' | '·' | '\u{00d7}' => {
                out.push(Tok::Star);
                i += 1
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' | '{' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' | '}' => {
                out.push(Tok::RParen);
                i += 1
            }
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse()?));
            }
            c if c.is_alphabetic() => {
                let start = i;
                i += 1;
                let is_greek = matches!(c, 'λ' | 'ψ');
                let greedy = matches!(c, 'p' | 'l');
                if is_greek || greedy {
                    // psiN, lN, ψN, λN, lambdaN: name followed by an index
                    while i < chars.len() && chars[i].is_alphabetic() && !is_greek {
                        i += 1;
                    }
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let word: String = chars[start..i].iter().collect();
                out.push(Tok::Ident(word));
            }
            other => return Err(err(format!("unexpected character {other:?} in {s:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
    src: String,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            what: "expression",
            detail: format!("{msg} at token {} in {:?}", self.pos, self.src),
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                Expr::Neg(Box::new(self.product()?))
            }
            Some(Tok::Plus) => {
                self.next();
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
                }
                Some(Tok::Minus) => {
                    self.next();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                Some(Tok::Slash) => {
                    self.next();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Num(n)) if n.is_integer() && !n.is_negative() => {
                    let e = u32::try_from(n.numer()).map_err(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                Some(Tok::LParen) => {
                    let e = match self.next() {
                        Some(Tok::Num(n)) if n.is_integer() => n,
                        _ => return Err(self.err("expected integer exponent")),
                    };
                    if self.next() != Some(Tok::RParen) {
                        return Err(self.err("expected ')' after exponent"));
                    }
                    let e = u32::try_from(e.numer()).map_err(|_| self.err("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(base), e));
                }
                _ => return Err(self.err("expected nonnegative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.next() {
            Some(Tok::Num(n)) => Ok(Expr::Num(n)),
            Some(Tok::LParen) => {
                let e = self.sum()?;
                if self.next() != Some(Tok::RParen) {
                    return Err(self.err("unbalanced parentheses"));
                }
                Ok(e)
            }
            Some(Tok::Minus) => Ok(Expr::Neg(Box::new(self.power()?))),
            Some(Tok::Ident(w)) => {
                let idx = w.trim_start_matches(|c: char| c.is_alphabetic());
                let name = &w[..w.len() - idx.len()];
                match name {
                    "psi" | "ψ" => {
                        let n: i64 = idx.parse().map_err(|_| self.err("psi needs an index"))?;
                        Ok(Expr::Psi(n))
                    }
                    "l" | "λ" | "lambda" if !idx.is_empty() => Ok(Expr::Sym(format!("l{idx}"))),
                    _ if idx.is_empty() => Ok(Expr::Sym(w)),
                    _ => Err(self.err(&format!("unknown symbol {w}"))),
                }
            }
            _ => Err(self.err("expected a number, symbol or '('")),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(s)?,
        pos: 0,
        src: s.to_string(),
    };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}
