//! Expression syntax and evaluation.
//!
//! Grammar (whitespace insensitive, left associative):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := rational | '(' expr ')' | 'lim(' ident ')'
//! rational := ['-'] digits ['/' digits]
//! ```

use std::fmt;

use baire::reals::{
    add_realizer, e1_sequence, geom2_sequence, lim_eff_realizer, mul_realizer, neg_realizer,
    rat_name, two_pow, Rat, RealName,
};
use num::BigInt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Lit(Rat),
    Neg(Box<Expr>),
    Sum(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    EffLimit(Builtin),
}

/// Builtin efficiently Cauchy sequences; their moduli are established
/// analytically in the library.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// Partial geometric sums, limit 2, tail exactly `2^-n`.
    Geom2,
    /// Partial factorial sums, limit e, tail at most `2/(n+3)! <= 2^-n`.
    E1,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Expected(&'static str),
    UnknownBuiltin(String),
    ZeroDenominator,
    TrailingInput,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Expected(what) => {
                write!(f, "syntax error at byte {}: expected {}", self.offset, what)
            }
            ParseErrorKind::UnknownBuiltin(name) => {
                write!(f, "unknown builtin '{}' at byte {}", name, self.offset)
            }
            ParseErrorKind::ZeroDenominator => {
                write!(f, "zero denominator at byte {}", self.offset)
            }
            ParseErrorKind::TrailingInput => {
                write!(f, "syntax error at byte {}: trailing input", self.offset)
            }
        }
    }
}

impl std::error::Error for ParseError {}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError {
            offset: p.pos,
            kind: ParseErrorKind::TrailingInput,
        });
    }
    Ok(expr)
}

/// Parse a standalone rational literal (used for CLI accuracy arguments).
pub fn parse_rational(text: &str) -> Result<Rat, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let q = p.rational()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(ParseError {
            offset: p.pos,
            kind: ParseErrorKind::TrailingInput,
        });
    }
    Ok(q)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let rhs = self.term()?;
                acc = Expr::Sum(Box::new(acc), Box::new(rhs));
            } else if self.eat(b'-') {
                let rhs = self.term()?;
                acc = Expr::Sum(Box::new(acc), Box::new(Expr::Neg(Box::new(rhs))));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            let rhs = self.factor()?;
            acc = Expr::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(b')') {
                    return Err(ParseError {
                        offset: self.pos,
                        kind: ParseErrorKind::Expected(")"),
                    });
                }
                Ok(inner)
            }
            Some(b'-') | Some(b'0'..=b'9') => self.rational().map(Expr::Lit),
            Some(c) if c.is_ascii_alphabetic() => self.limit(),
            _ => Err(ParseError {
                offset: self.pos,
                kind: ParseErrorKind::Expected("a rational, '(' or 'lim('"),
            }),
        }
    }

    fn limit(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let word = self.ident();
        if word != "lim" {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::Expected("'lim('"),
            });
        }
        if !self.eat(b'(') {
            return Err(ParseError {
                offset: self.pos,
                kind: ParseErrorKind::Expected("'('"),
            });
        }
        self.skip_ws();
        let name_start = self.pos;
        let name = self.ident();
        let builtin = match name.as_str() {
            "geom2" => Builtin::Geom2,
            "e1" => Builtin::E1,
            _ => {
                return Err(ParseError {
                    offset: name_start,
                    kind: ParseErrorKind::UnknownBuiltin(name),
                })
            }
        };
        if !self.eat(b')') {
            return Err(ParseError {
                offset: self.pos,
                kind: ParseErrorKind::Expected(")"),
            });
        }
        Ok(Expr::EffLimit(builtin))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn rational(&mut self) -> Result<Rat, ParseError> {
        self.skip_ws();
        let negative = self.eat(b'-');
        let numer = self.digits()?;
        let denom = if self.eat(b'/') {
            let denom_start = self.pos;
            let d = self.digits()?;
            if d == BigInt::from(0) {
                return Err(ParseError {
                    offset: denom_start,
                    kind: ParseErrorKind::ZeroDenominator,
                });
            }
            d
        } else {
            BigInt::from(1)
        };
        let numer = if negative { -numer } else { numer };
        Ok(Rat::new(numer, denom))
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError {
                offset: start,
                kind: ParseErrorKind::Expected("digits"),
            });
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digit strings parse as integers"))
    }
}

/// Compose the arithmetic realizers bottom-up into one name of the value.
pub fn expr_name(expr: &Expr) -> RealName {
    match expr {
        Expr::Lit(q) => rat_name(q.clone()),
        Expr::Neg(inner) => neg_realizer(&expr_name(inner)),
        Expr::Sum(a, b) => add_realizer(&expr_name(a), &expr_name(b)),
        Expr::Product(a, b) => mul_realizer(&expr_name(a), &expr_name(b)),
        Expr::EffLimit(Builtin::Geom2) => lim_eff_realizer(&geom2_sequence()),
        Expr::EffLimit(Builtin::E1) => lim_eff_realizer(&e1_sequence()),
    }
}

/// A rational within `2^-prec_exp` of the expression's value.
pub fn eval_expr(expr: &Expr, prec_exp: u32) -> Rat {
    expr_name(expr).query(&two_pow(-(prec_exp as i64)))
}
