//! Parser for algebra expressions.
//!
//! Grammar (whitespace insensitive except where noted):
//!
//! ```text
//! expr    :=  ['-'] term ( ('+' | '-') term )*
//! term    :=  factor ( ['*'] factor )*          products may juxtapose
//! factor  :=  atom ['^' ['-'] integer]
//! atom    :=  generator | 'q' | rational | '(' expr ')'
//! ```
//!
//! A `*` written immediately after a generator name (no space) is the
//! star of that generator, so `b*a` is `b* . a`; a `*` preceded by a
//! space, a number or `)` is the product operator.  The `S` suffix form
//! (`bS`, `alphaS`) always denotes the star and is what the printer
//! emits.  Negative powers are only allowed on coefficients (`q^-4`).

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncalg::element::NcElement;
use crate::ncalg::presentation::Presentation;
use crate::qlaurent::{LaurentPoly, RatQ};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Ident(String),
    Number(BigInt),
    Q,
    /// `*` attached to the preceding identifier: the star involution.
    TightStar,
    /// `*` as the product operator.
    Times,
    Caret,
    Plus,
    Minus,
    Slash,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    // true when the previous significant char ended an identifier and no
    // whitespace has intervened, so a following '*' binds as the star
    let mut glue = false;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            glue = false;
            i += 1;
            continue;
        }
        match c {
            '*' => {
                tokens.push(if glue { Token::TightStar } else { Token::Times });
                glue = false;
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                glue = false;
                i += 1;
            }
            '+' => {
                tokens.push(Token::Plus);
                glue = false;
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                glue = false;
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                glue = false;
                i += 1;
            }
            '(' => {
                tokens.push(Token::LParen);
                glue = false;
                i += 1;
            }
            ')' => {
                tokens.push(Token::RParen);
                glue = false;
                i += 1;
            }
            _ if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let value = text
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad number `{text}`")))?;
                tokens.push(Token::Number(value));
                glue = false;
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                tokens.push(if text == "q" { Token::Q } else { Token::Ident(text) });
                glue = true;
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    pres: &'a Arc<Presentation>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, t: &Token) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<NcElement> {
        let mut acc = if self.eat(&Token::Minus) {
            -&self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<NcElement> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Times) => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let c = constant_coefficient(&rhs).ok_or_else(|| {
                        Error::Parse("division by a non-coefficient".into())
                    })?;
                    let inv = c.inverse().map_err(|_| Error::DivisionByZero)?;
                    acc = acc.scale(&inv);
                }
                // juxtaposition: `alpha beta`, `2 a`, `(1 - q) b`
                Some(Token::Ident(_))
                | Some(Token::Q)
                | Some(Token::Number(_))
                | Some(Token::LParen) => {
                    acc = &acc * &self.factor()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<NcElement> {
        let mut base = self.atom()?;
        if self.eat(&Token::TightStar) {
            base = base.star();
        }
        if self.eat(&Token::Caret) {
            let negative = self.eat(&Token::Minus);
            let n = match self.next() {
                Some(Token::Number(n)) => n,
                other => {
                    return Err(Error::Parse(format!(
                        "expected an integer exponent, found {other:?}"
                    )))
                }
            };
            let n_u32: u32 = n
                .to_string()
                .parse()
                .map_err(|_| Error::Parse("exponent too large".into()))?;
            if negative {
                // only invertible coefficients admit negative powers
                let c = constant_coefficient(&base).ok_or_else(|| {
                    Error::Parse("negative power of a non-coefficient".into())
                })?;
                let inv = c.inverse().map_err(|_| Error::DivisionByZero)?;
                let mut acc = RatQ::one();
                for _ in 0..n_u32 {
                    acc = &acc * &inv;
                }
                base = NcElement::monomial(
                    self.pres,
                    self.pres.unit_nf(),
                    acc,
                );
            } else {
                base = base.pow(n_u32);
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<NcElement> {
        match self.next() {
            Some(Token::Ident(name)) => match self.pres.gen_by_name(&name) {
                Some(g) => Ok(NcElement::generator(self.pres, g)),
                None => Err(Error::UnknownGenerator(name)),
            },
            Some(Token::Q) => Ok(NcElement::monomial(
                self.pres,
                self.pres.unit_nf(),
                RatQ::q_pow(1),
            )),
            Some(Token::Number(n)) => Ok(NcElement::monomial(
                self.pres,
                self.pres.unit_nf(),
                RatQ::from_rational(BigRational::from_integer(n)),
            )),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(Error::Parse("missing closing parenthesis".into()));
                }
                Ok(inner)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// The coefficient of an element that is a pure constant, `None`
/// otherwise.
fn constant_coefficient(x: &NcElement) -> Option<RatQ> {
    if x.is_zero() {
        return Some(RatQ::zero());
    }
    if x.term_count() == 1 {
        let (nf, c) = x.terms().next().unwrap();
        if nf.is_unit() {
            return Some(c.clone());
        }
    }
    None
}

/// Parses an expression over the given presentation.
pub fn parse_expression(pres: &Arc<Presentation>, src: &str) -> Result<NcElement> {
    let tokens = lex(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { pres, tokens, pos: 0 };
    let out = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input at token {}",
            parser.pos
        )));
    }
    Ok(out)
}

/// Convenience: `q^n` as a coefficient polynomial (used by tests).
#[allow(dead_code)]
pub(crate) fn q_pow_poly(n: i64) -> LaurentPoly {
    LaurentPoly::q_pow(n)
}
