//! Expression language over the q-series building blocks.
//!
//! Grammar (precedence low to high: `+ -`; `* /`; unary `-`; `^`):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' signed-integer)?
//! atom   := integer | "q" | "E" integer | "P(" a "," m ")" | "R(" k ")"
//!         | "psi" | "(" expr ")"
//! ```
//!
//! Whitespace is insignificant. `E15^3/E5*q` denotes `q * E15^3 / E5`.
//! Parse errors carry the byte offset of the offending input.

use std::fmt;

use thiserror::Error;

use crate::products::{
    e_sparse_terms, expand_e, expand_e_mod, expand_pochhammer, expand_r, psi, PochhammerSpec,
};
use crate::series::{ModSeries, ReductionContext, Series, SeriesError};

/// Parsed expression tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Q,
    E(usize),
    Poch(usize, usize),
    R(usize),
    Psi,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("evaluation error in `{subexpr}`: {source}")]
pub struct EvalError {
    pub subexpr: String,
    #[source]
    pub source: SeriesError,
}

/// Parse an expression; errors carry the byte offset.
pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    p.skip_ws();
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: &str) -> ParseError {
        ParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, b: u8) -> Result<(), ParseError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.unary()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let rhs = self.unary()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        if self.eat(b'-') {
            self.skip_ws();
            let inner = self.unary()?;
            Ok(Expr::Neg(Box::new(inner)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let negative = self.eat(b'-');
            let mag = self.integer()?;
            let exp = if negative { -mag } else { mag };
            Ok(Expr::Pow(Box::new(base), exp))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.skip_ws();
                self.expect(b')')?;
                Ok(e)
            }
            Some(b'0'..=b'9') => Ok(Expr::Int(self.integer()?)),
            Some(b'q') => {
                self.pos += 1;
                Ok(Expr::Q)
            }
            Some(b'p') => {
                if self.bytes[self.pos..].starts_with(b"psi") {
                    self.pos += 3;
                    Ok(Expr::Psi)
                } else {
                    Err(ParseError {
                        offset: start,
                        message: "unknown symbol".to_string(),
                    })
                }
            }
            Some(b'E') => {
                self.pos += 1;
                let n = self.integer()? as usize;
                if n < 1 {
                    return Err(ParseError {
                        offset: start,
                        message: "E-index must be at least 1".to_string(),
                    });
                }
                Ok(Expr::E(n))
            }
            Some(b'P') => {
                self.pos += 1;
                self.skip_ws();
                self.expect(b'(')?;
                self.skip_ws();
                let a = self.integer()? as usize;
                self.skip_ws();
                self.expect(b',')?;
                self.skip_ws();
                let m = self.integer()? as usize;
                self.skip_ws();
                self.expect(b')')?;
                if a < 1 || m < 1 {
                    return Err(ParseError {
                        offset: start,
                        message: "Pochhammer offset and step must be at least 1".to_string(),
                    });
                }
                Ok(Expr::Poch(a, m))
            }
            Some(b'R') => {
                self.pos += 1;
                self.skip_ws();
                self.expect(b'(')?;
                self.skip_ws();
                let k = self.integer()? as usize;
                self.skip_ws();
                self.expect(b')')?;
                if k < 1 {
                    return Err(ParseError {
                        offset: start,
                        message: "R-inflation step must be at least 1".to_string(),
                    });
                }
                Ok(Expr::R(k))
            }
            _ => Err(self.err("expected an atom")),
        }
    }

    fn integer(&mut self) -> Result<i64, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are valid UTF-8")
            .parse::<i64>()
            .map_err(|_| ParseError {
                offset: start,
                message: "integer literal too large".to_string(),
            })
    }
}

// Printing with minimal parentheses; `parse(print(e)) == e` for all trees.

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(..) => 3,
        Expr::Pow(..) => 4,
        _ => 5,
    }
}

fn fmt_at(e: &Expr, min_prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let p = prec(e);
    if p < min_prec {
        write!(f, "(")?;
        fmt_at(e, 0, f)?;
        return write!(f, ")");
    }
    match e {
        Expr::Int(i) => write!(f, "{i}"),
        Expr::Q => write!(f, "q"),
        Expr::E(n) => write!(f, "E{n}"),
        Expr::Poch(a, m) => write!(f, "P({a},{m})"),
        Expr::R(k) => write!(f, "R({k})"),
        Expr::Psi => write!(f, "psi"),
        Expr::Neg(x) => {
            write!(f, "-")?;
            fmt_at(x, 3, f)
        }
        Expr::Add(a, b) => {
            fmt_at(a, 1, f)?;
            write!(f, "+")?;
            fmt_at(b, 2, f)
        }
        Expr::Sub(a, b) => {
            fmt_at(a, 1, f)?;
            write!(f, "-")?;
            fmt_at(b, 2, f)
        }
        Expr::Mul(a, b) => {
            fmt_at(a, 2, f)?;
            write!(f, "*")?;
            fmt_at(b, 3, f)
        }
        Expr::Div(a, b) => {
            fmt_at(a, 2, f)?;
            write!(f, "/")?;
            fmt_at(b, 3, f)
        }
        Expr::Pow(base, k) => {
            fmt_at(base, 5, f)?;
            write!(f, "^{k}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_at(self, 0, f)
    }
}

/// Evaluate under the given context: exact `BigInt` arithmetic without a
/// modulus, the fixed-modulus kernel with one.
pub fn eval(e: &Expr, order: usize, ctx: &ReductionContext) -> Result<Series, EvalError> {
    match ctx.modulus() {
        None => eval_exact(e, order),
        Some(m) => Ok(eval_mod(e, order, m)?.to_series()),
    }
}

fn wrap<T>(r: Result<T, SeriesError>, e: &Expr) -> Result<T, EvalError> {
    r.map_err(|source| EvalError {
        subexpr: e.to_string(),
        source,
    })
}

/// Exact bottom-up evaluation.
pub fn eval_exact(e: &Expr, order: usize) -> Result<Series, EvalError> {
    Ok(match e {
        Expr::Int(i) => wrap(Series::monomial(*i, 0, order), e)?,
        Expr::Q => {
            if order > 1 {
                wrap(Series::monomial(1, 1, order), e)?
            } else {
                Series::zero(order)
            }
        }
        Expr::E(n) => expand_e(*n, order),
        Expr::Poch(a, m) => expand_pochhammer(PochhammerSpec::new(*a, *m), order),
        Expr::R(k) => expand_r(*k, order),
        Expr::Psi => psi(order),
        Expr::Neg(x) => eval_exact(x, order)?.neg(),
        Expr::Add(a, b) => eval_exact(a, order)?.add(&eval_exact(b, order)?),
        Expr::Sub(a, b) => eval_exact(a, order)?.sub(&eval_exact(b, order)?),
        Expr::Mul(a, b) => eval_exact(a, order)?.mul(&eval_exact(b, order)?),
        Expr::Div(a, b) => {
            let den = eval_exact(b, order)?;
            eval_exact(a, order)?.mul(&wrap(den.invert(), b)?)
        }
        Expr::Pow(base, k) => wrap(eval_exact(base, order)?.pow(*k), e)?,
    })
}

/// Bottom-up evaluation on the fixed-modulus kernel.
pub fn eval_mod(e: &Expr, order: usize, modulus: u64) -> Result<ModSeries, EvalError> {
    Ok(match e {
        Expr::Int(i) => wrap(ModSeries::monomial(*i, 0, order, modulus), e)?,
        Expr::Q => {
            if order > 1 {
                wrap(ModSeries::monomial(1, 1, order, modulus), e)?
            } else {
                wrap(ModSeries::zero(order, modulus), e)?
            }
        }
        Expr::E(n) => wrap(expand_e_mod(*n, order, modulus), e)?,
        Expr::Poch(a, m) => {
            let s = expand_pochhammer(PochhammerSpec::new(*a, *m), order);
            wrap(ModSeries::from_series(&s, modulus), e)?
        }
        Expr::R(k) => {
            // R's Pochhammer pieces have small exact coefficients; reduce the
            // memoized exact expansion.
            wrap(ModSeries::from_series(&expand_r(*k, order), modulus), e)?
        }
        Expr::Psi => wrap(ModSeries::from_series(&psi(order), modulus), e)?,
        Expr::Neg(x) => {
            let zero = wrap(ModSeries::zero(order, modulus), e)?;
            zero.sub(&eval_mod(x, order, modulus)?)
        }
        Expr::Add(a, b) => eval_mod(a, order, modulus)?.add(&eval_mod(b, order, modulus)?),
        Expr::Sub(a, b) => eval_mod(a, order, modulus)?.sub(&eval_mod(b, order, modulus)?),
        Expr::Mul(..) | Expr::Div(..) | Expr::Pow(..) => {
            let acc = wrap(ModSeries::one(order, modulus), e)?;
            fold_mod_product(acc, e, false, order, modulus)?
        }
    })
}

/// Fold a product/quotient subtree into `acc`, applying `E_n` factors through
/// their sparse pentagonal form (O(order * sqrt(order)) per factor) instead of
/// dense convolution. This is what makes the very deep modular dissections
/// (hundred-thousand-term eta quotients) run in well under a second.
fn fold_mod_product(
    acc: ModSeries,
    e: &Expr,
    inverted: bool,
    order: usize,
    modulus: u64,
) -> Result<ModSeries, EvalError> {
    match e {
        Expr::Mul(a, b) => {
            let acc = fold_mod_product(acc, a, inverted, order, modulus)?;
            fold_mod_product(acc, b, inverted, order, modulus)
        }
        Expr::Div(a, b) => {
            let acc = fold_mod_product(acc, a, inverted, order, modulus)?;
            fold_mod_product(acc, b, !inverted, order, modulus)
        }
        Expr::E(n) => {
            let terms = e_sparse_terms(*n, order);
            Ok(if inverted {
                acc.div_sparse_unit(&terms)
            } else {
                acc.mul_sparse_unit(&terms)
            })
        }
        Expr::Pow(base, k) => {
            if let Expr::E(n) = **base {
                let terms = e_sparse_terms(n, order);
                let invert_each = inverted ^ (*k < 0);
                let mut acc = acc;
                for _ in 0..k.unsigned_abs() {
                    acc = if invert_each {
                        acc.div_sparse_unit(&terms)
                    } else {
                        acc.mul_sparse_unit(&terms)
                    };
                }
                Ok(acc)
            } else {
                let exponent = if inverted { -*k } else { *k };
                let factor = wrap(eval_mod(base, order, modulus)?.pow(exponent), e)?;
                Ok(acc.mul(&factor))
            }
        }
        _ => {
            let factor = eval_mod(e, order, modulus)?;
            if inverted {
                Ok(acc.mul(&wrap(factor.invert(), e)?))
            } else {
                Ok(acc.mul(&factor))
            }
        }
    }
}
