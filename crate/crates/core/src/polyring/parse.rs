//! Text format for Laurent polynomials.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor (['*'] factor)*
//! factor  := atom ['^' ['-'] integer]
//! atom    := integer | 't' | ('Phi' | 'Φ') ['_'] integer | '(' expr ')'
//! ```
//!
//! Negative exponents are only allowed on `t`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::cyclotomic::cyclotomic_fast;
use super::IntLaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

enum Atom {
    Var,
    Poly(IntLaurentPoly),
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or(self.src.len())
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.offset(), message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        let mut s = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
            s.push(c);
            self.pos += 1;
        }
        if s.is_empty() {
            self.pos = start;
            return self.err("expected integer");
        }
        Ok(s.parse().expect("digits parse"))
    }

    fn small_integer(&mut self) -> Result<i64, ParseError> {
        let at = self.offset();
        let v = self.integer()?;
        i64::try_from(v).map_err(|_| ParseError { position: at, message: "exponent too large".into() })
    }

    fn expr(&mut self) -> Result<IntLaurentPoly, ParseError> {
        let mut acc = IntLaurentPoly::zero();
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some('+') => {
                    self.bump();
                    sign = 1;
                }
                Some('-') => {
                    self.bump();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == 't' || c == '(' || c == 'P' || c == 'Φ')
    }

    fn term(&mut self) -> Result<IntLaurentPoly, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') || self.starts_atom() {
                let f = self.factor()?;
                acc = &acc * &f;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<IntLaurentPoly, ParseError> {
        let atom = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let e = self.small_integer()?;
            return match atom {
                Atom::Var => Ok(IntLaurentPoly::monomial(BigInt::one(), if neg { -e } else { e })),
                Atom::Poly(p) => {
                    if neg {
                        if p.is_monomial() && (p.leading_coeff() == BigInt::one() || p.leading_coeff() == -BigInt::one()) {
                            let c = if e % 2 == 1 { p.leading_coeff() } else { BigInt::one() };
                            return Ok(IntLaurentPoly::monomial(c, -e * p.low_exponent()));
                        }
                        return self.err("negative exponent on a non-unit");
                    }
                    let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
                    Ok(p.pow(e))
                }
            };
        }
        Ok(match atom {
            Atom::Var => IntLaurentPoly::t(),
            Atom::Poly(p) => p,
        })
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => Ok(Atom::Poly(IntLaurentPoly::constant(self.integer()?))),
            Some('t') => {
                self.bump();
                Ok(Atom::Var)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(Atom::Poly(inner))
            }
            Some('Φ') => {
                self.bump();
                self.cyclotomic_index()
            }
            Some('P') => {
                self.bump();
                if !(self.eat('h') && self.eat('i')) {
                    return self.err("expected 'Phi'");
                }
                self.cyclotomic_index()
            }
            Some(c) => self.err(format!("unexpected character '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }

    fn cyclotomic_index(&mut self) -> Result<Atom, ParseError> {
        self.eat('_');
        let k = self.small_integer()?;
        if k < 1 {
            return self.err("cyclotomic index must be positive");
        }
        Ok(Atom::Poly(cyclotomic_fast(k as u64)))
    }
}

pub fn parse_poly(src: &str) -> Result<IntLaurentPoly, ParseError> {
    let mut p = Parser::new(src);
    if p.peek().is_none() {
        return p.err("empty polynomial");
    }
    let out = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(out)
}

impl FromStr for IntLaurentPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}
