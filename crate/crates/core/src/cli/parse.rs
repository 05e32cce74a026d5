//! Polynomial text grammar.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | ident | '(' expr ')'
//! ident   := [a-zA-Z][a-zA-Z0-9_]*
//! ```
//!
//! Whitespace is ignored between tokens. Juxtaposition (`2x`, `x y`) is a
//! syntax error.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::{Poly, Rational};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '/' => Tok::Slash,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    pos: start,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

enum Ast {
    Num(Rational),
    Var(String),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Neg(Box<Ast>),
    Pow(Box<Ast>, u32),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.1.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Ast> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e = u32::try_from(&n).map_err(|_| Error::UnsupportedSize(format!("exponent {n}")))?;
                    if let Some(Tok::Caret) = self.peek() {
                        return self.err("chained exponents need parentheses");
                    }
                    return Ok(Ast::Pow(Box::new(base), e));
                }
                _ => {
                    self.pos -= 1;
                    return self.err("exponent must be a non-negative integer");
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => Ok(Ast::Num(Rational::new(n, d))),
                        Some(Tok::Int(_)) => {
                            self.pos -= 1;
                            self.err("zero denominator")
                        }
                        _ => {
                            self.pos -= 1;
                            self.err("expected integer denominator after `/`")
                        }
                    }
                } else {
                    Ok(Ast::Num(Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => Ok(Ast::Var(name)),
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => {
                        self.pos -= 1;
                        self.err("expected `)`")
                    }
                }
            }
            _ => {
                self.pos -= 1;
                self.err("expected a number, variable or `(`")
            }
        }
    }
}

fn collect_vars(ast: &Ast, out: &mut Vec<String>) {
    match ast {
        Ast::Num(_) => {}
        Ast::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone());
            }
        }
        Ast::Add(a, b) | Ast::Sub(a, b) | Ast::Mul(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
        Ast::Neg(a) | Ast::Pow(a, _) => collect_vars(a, out),
    }
}

fn eval(ast: &Ast, vars: &[String]) -> Result<Poly> {
    Ok(match ast {
        Ast::Num(c) => Poly::constant(c.clone(), vars),
        Ast::Var(v) => Poly::var(v, vars)?,
        Ast::Add(a, b) => &eval(a, vars)? + &eval(b, vars)?,
        Ast::Sub(a, b) => &eval(a, vars)? - &eval(b, vars)?,
        Ast::Mul(a, b) => eval(a, vars)?.try_mul(&eval(b, vars)?)?,
        Ast::Neg(a) => -eval(a, vars)?,
        Ast::Pow(a, e) => eval(a, vars)?.pow(*e)?,
    })
}

/// Parses a polynomial with rational coefficients.
///
/// With `declared = Some(vars)` the result lives over exactly `vars` and any
/// other identifier is an [`Error::UnknownVariable`]. Without a declaration
/// the variables that occur are used, sorted by name.
pub fn parse_poly<S: AsRef<str>>(text: &str, declared: Option<&[S]>) -> Result<Poly> {
    let toks = lex(text)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    if parser.peek().is_none() {
        return parser.err("empty expression");
    }
    let ast = parser.expr()?;
    if parser.peek().is_some() {
        return parser.err("unexpected token (implicit multiplication is not allowed)");
    }
    let mut used = Vec::new();
    collect_vars(&ast, &mut used);
    let vars: Vec<String> = match declared {
        Some(d) => {
            let d: Vec<String> = d.iter().map(|s| s.as_ref().to_string()).collect();
            if let Some(u) = used.iter().find(|u| !d.contains(u)) {
                return Err(Error::UnknownVariable(u.clone()));
            }
            d
        }
        None => {
            used.sort();
            used
        }
    };
    eval(&ast, &vars)
}

impl std::str::FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly::<&str>(s, None)
    }
}

/// Parses a rational literal `a`, `-a` or `a/b`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let p = parse_poly::<&str>(text, Some(&[]))?;
    p.constant_value()
        .ok_or_else(|| Error::invalid(format!("`{text}` is not a rational number")))
}
