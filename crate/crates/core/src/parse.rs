//! Tokenizer and recursive-descent parser for scalar and polynomial text forms.
//!
//! ```text
//! poly   := ['+'|'-'] prod (('+'|'-') prod)*
//! prod   := power (('*'|'/') power)*
//! power  := atom ['^' ['-'] int]
//! atom   := int | 'im' | 'sqrt(' poly ')' | z1 | z1c | z2 | z2c | r2 | '(' poly ')'
//! ```
//! Division and `sqrt` accept only constants; negative powers only of monomials.

use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::ParseError;
use crate::laurent::{LaurentPoly, Var};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = s[start..i].parse().expect("digits");
            out.push(Token {
                tok: Tok::Int(n),
                pos: start,
            });
        } else if ch.is_ascii_alphabetic() || ch == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s[start..i].to_string()),
                pos: start,
            });
        } else if "+-*/^(),;[]".contains(ch) {
            out.push(Token {
                tok: Tok::Sym(ch),
                pos: i,
            });
            i += 1;
        } else {
            return Err(ParseError::new(i, format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

/// Cursor over a token stream; shared with higher-level grammars.
pub struct Parser {
    toks: Vec<Token>,
    idx: usize,
    len: usize,
}

impl Parser {
    pub fn new(s: &str) -> Result<Self, ParseError> {
        Ok(Parser {
            toks: tokenize(s)?,
            idx: 0,
            len: s.len(),
        })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.idx + k).map(|t| &t.tok)
    }

    pub fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|t| t.pos).unwrap_or(self.len)
    }

    pub fn advance(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|t| t.tok.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    pub fn at_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{c}`")))
        }
    }

    pub fn expect_end(&self) -> Result<(), ParseError> {
        if self.idx == self.toks.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }

    pub fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(self.pos(), msg)
    }

    pub fn int(&mut self) -> Result<BigInt, ParseError> {
        match self.advance() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.idx = self.idx.saturating_sub(1);
                Err(self.err("expected integer"))
            }
        }
    }

    /// Optionally signed integer.
    pub fn signed_int(&mut self) -> Result<BigInt, ParseError> {
        let neg = self.eat_sym('-');
        let n = self.int()?;
        Ok(if neg { -n } else { n })
    }

    pub fn small_int(&mut self) -> Result<i64, ParseError> {
        let pos = self.pos();
        let n = self.signed_int()?;
        i64::try_from(n).map_err(|_| ParseError::new(pos, "integer too large"))
    }

    pub fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.idx += 1;
                Ok(s)
            }
            _ => Err(self.err("expected identifier")),
        }
    }

    pub fn poly(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = if self.eat_sym('-') {
            -self.prod()?
        } else {
            self.eat_sym('+');
            self.prod()?
        };
        loop {
            if self.eat_sym('+') {
                acc = acc + self.prod()?;
            } else if self.eat_sym('-') {
                acc = acc - self.prod()?;
            } else {
                return Ok(acc);
            }
        }
    }

    pub fn prod(&mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = self.power()?;
        loop {
            if self.eat_sym('*') {
                acc = acc * self.power()?;
            } else if self.at_sym('/') {
                let pos = self.pos();
                self.idx += 1;
                let d = self.power()?;
                let inv = d
                    .as_constant()
                    .and_then(|c| c.inv().ok())
                    .ok_or_else(|| ParseError::new(pos, "division by a non-constant or zero"))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    pub fn power(&mut self) -> Result<LaurentPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let k = self.small_int()?;
        if k >= 0 {
            let mut out = LaurentPoly::one();
            for _ in 0..k {
                out = &out * &base;
            }
            return Ok(out);
        }
        // negative powers: only r2 and invertible constants
        if let Some(c) = base.as_constant() {
            let inv = c
                .inv()
                .map_err(|_| ParseError::new(pos, "negative power of zero"))?;
            return Ok(LaurentPoly::constant(inv.pow((-k) as u32)));
        }
        let r = LaurentPoly::r_pow(1);
        if base == r {
            return Ok(LaurentPoly::r_pow(k as i32));
        }
        Err(ParseError::new(pos, "negative power of a non-unit"))
    }

    fn atom(&mut self) -> Result<LaurentPoly, ParseError> {
        let pos = self.pos();
        match self.advance() {
            Some(Tok::Int(n)) => Ok(LaurentPoly::constant(Scalar::from_bigint(n))),
            Some(Tok::Sym('(')) => {
                let p = self.poly()?;
                self.expect_sym(')')?;
                Ok(p)
            }
            Some(Tok::Ident(name)) => match name.as_str() {
                "im" => Ok(LaurentPoly::constant(Scalar::i())),
                "z1" => Ok(LaurentPoly::var(Var::Z1)),
                "z1c" => Ok(LaurentPoly::var(Var::Z1c)),
                "z2" => Ok(LaurentPoly::var(Var::Z2)),
                "z2c" => Ok(LaurentPoly::var(Var::Z2c)),
                "r2" => Ok(LaurentPoly::r_pow(1)),
                "sqrt" => {
                    self.expect_sym('(')?;
                    let p = self.poly()?;
                    self.expect_sym(')')?;
                    let r = p
                        .as_constant()
                        .and_then(|c| c.as_rational())
                        .ok_or_else(|| ParseError::new(pos, "sqrt needs a rational constant"))?;
                    let s = Scalar::sqrt_rational(&r)
                        .map_err(|e| ParseError::new(pos, e.to_string()))?;
                    Ok(LaurentPoly::constant(s))
                }
                other => Err(ParseError::new(pos, format!("unknown identifier `{other}`"))),
            },
            _ => Err(ParseError::new(pos, "expected a number, variable or `(`")),
        }
    }

    /// Parses a constant factor chain (as `prod`) and requires it to be a scalar.
    pub fn scalar(&mut self) -> Result<Scalar, ParseError> {
        let pos = self.pos();
        let p = self.poly()?;
        p.as_constant()
            .ok_or_else(|| ParseError::new(pos, "expected a constant"))
    }
}

impl FromStr for Scalar {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = Parser::new(s)?;
        let out = p.scalar()?;
        p.expect_end()?;
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "-1/2*im*sqrt(2)", "(3/2 + 1/2*im)*sqrt(2)", "1 - sqrt(2) + im*sqrt(6)"] {
            let x: Scalar = s.parse().unwrap();
            let y: Scalar = x.to_string().parse().unwrap();
            assert_eq!(x, y, "{s}");
        }
        let x: Scalar = "sqrt(8)/2".parse().unwrap();
        assert_eq!(x, Scalar::sqrt_int(2));
    }

    #[test]
    fn errors_carry_position() {
        let e = "1 + $".parse::<Scalar>().unwrap_err();
        assert_eq!(e.pos, 4);
        assert!("z1/z2".parse::<LaurentPoly>().is_err());
        assert!("z1".parse::<Scalar>().is_err());
    }
}
