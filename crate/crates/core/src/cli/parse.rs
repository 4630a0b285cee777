//! Recursive-descent parser for polynomial expressions in `x` and `y`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ('+' | '-') factor | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! Whitespace is insignificant. Error offsets are byte offsets into the input.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Rational};

const MAX_EXPONENT: u32 = 4096;

/// A parsed expression together with its source text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr {
    pub source: String,
    pub poly: BiPoly,
}

impl std::str::FromStr for PolyExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(PolyExpr {
            source: s.to_string(),
            poly: parse_poly(s)?,
        })
    }
}

pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let mut p = Parser { src: text, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(format!("unexpected '{}'", p.peek_char().unwrap())));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_char() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek_char(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_char()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self) -> Result<BiPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc += &self.term()?;
            } else if self.eat('-') {
                acc -= &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<BiPoly> {
        if self.eat('-') {
            return Ok(-self.factor()?);
        }
        if self.eat('+') {
            return self.factor();
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.error("expected a non-negative integer exponent"));
            }
            let e: u32 =
                digits
                    .parse()
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or(Error::Syntax {
                        offset: start,
                        message: format!("exponent must be at most {MAX_EXPONENT}"),
                    })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek_char(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<BiPoly> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                let save = self.pos;
                if self.eat('/') {
                    self.skip_ws();
                    let den_at = self.pos;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.error("expected an integer denominator"));
                    }
                    let den: BigInt = den.parse().expect("digits");
                    if den.is_zero() {
                        return Err(Error::Syntax {
                            offset: den_at,
                            message: "division by zero".into(),
                        });
                    }
                    return Ok(BiPoly::constant(Rational::new(num, den)));
                }
                self.pos = save;
                Ok(BiPoly::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while matches!(self.peek_char(), Some(c) if c.is_alphanumeric() || c == '_') {
                    self.pos += self.peek_char().unwrap().len_utf8();
                }
                match &self.src[start..self.pos] {
                    "x" => Ok(BiPoly::x()),
                    "y" => Ok(BiPoly::y()),
                    other => Err(Error::UnknownVariable {
                        name: other.to_string(),
                        offset: start,
                    }),
                }
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
        }
    }
}
