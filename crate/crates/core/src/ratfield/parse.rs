//! Reader for the printed form of rational functions, e.g.
//! `-3 * v^(1/2) * t^-1 + 1` or `(v^2 - 1) / (v)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::{Coeff, Exp};
use super::{RatError, RatFunc};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, RatError> {
    let mut out = Vec::new();
    let b: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let start = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = b[start..i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("digits"))));
                continue;
            }
            'v' | 't' => Tok::Var(c),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(RatError::Parse { pos: i, msg: format!("unexpected character '{c}'") }),
        };
        out.push((i, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T, RatError> {
        Err(RatError::Parse { pos: self.here(), msg: msg.to_string() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RatFunc, RatError> {
        let neg = self.eat(&Tok::Minus);
        let mut acc = self.term()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc += self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc, RatError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc * self.factor()?;
            } else if self.eat(&Tok::Slash) {
                let at = self.here();
                let d = self.factor()?;
                acc = acc.checked_div(&d).map_err(|_| RatError::Parse { pos: at, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc, RatError> {
        let at = self.here();
        let base = match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                RatFunc::constant(Coeff::from_integer(n))
            }
            Some(Tok::Var(c)) => {
                self.pos += 1;
                if self.eat(&Tok::Caret) {
                    let e = self.exponent()?;
                    return Ok(if c == 'v' { RatFunc::mono(e, Exp::zero()) } else { RatFunc::mono(Exp::zero(), e) });
                }
                if c == 'v' {
                    RatFunc::v()
                } else {
                    RatFunc::t()
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                inner
            }
            _ => return self.err("expected a number, 'v', 't' or '('"),
        };
        if self.eat(&Tok::Caret) {
            let e = self.exponent()?;
            if !e.is_integer() {
                return Err(RatError::Parse { pos: at, msg: "fractional power of a compound expression".into() });
            }
            if base.is_zero() && *e.numer() < 0 {
                return Err(RatError::Parse { pos: at, msg: "negative power of zero".into() });
            }
            return Ok(base.pow(*e.numer()));
        }
        Ok(base)
    }

    fn small_int(&mut self) -> Result<i64, RatError> {
        let neg = self.eat(&Tok::Minus);
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let n: i64 = i64::try_from(n).or_else(|_| self.err("exponent out of range"))?;
                Ok(if neg { -n } else { n })
            }
            _ => self.err("expected an integer exponent"),
        }
    }

    fn exponent(&mut self) -> Result<Exp, RatError> {
        if self.eat(&Tok::LParen) {
            let n = self.small_int()?;
            let d = if self.eat(&Tok::Slash) { self.small_int()? } else { 1 };
            if d == 0 {
                return self.err("zero exponent denominator");
            }
            if !self.eat(&Tok::RParen) {
                return self.err("expected ')'");
            }
            Ok(Exp::new(n, d))
        } else {
            Ok(Exp::from_integer(self.small_int()?))
        }
    }
}

/// Parse a rational function written in the display grammar (with `+ - * / ^`
/// and parentheses allowed).
pub fn parse_ratfunc(s: &str) -> Result<RatFunc, RatError> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(RatError::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: s.chars().count() };
    let r = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(r)
}

/// Parse a rational number such as `3`, `-1/2`.
pub fn parse_rational(s: &str) -> Result<Coeff, RatError> {
    let r = parse_ratfunc(s)?;
    r.as_constant().ok_or(RatError::Parse { pos: 0, msg: format!("'{s}' is not a rational number") })
}
