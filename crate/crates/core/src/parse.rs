//! Expression parser for ring elements and polynomials.
//!
//! Element grammar: a sum of terms, each an optional decimal scalar times an
//! optional monomial (`1 + 2*x1^(1/2)x2 + x3`). Polynomial grammar: a sum of
//! parenthesized elements with optional `t` powers
//! (`(x1^(1/2)) + (1 + x2)t + (x3)t^2`). Whitespace-insensitive. Zero
//! exponents are a syntax error; write the scalar instead.

use std::fmt;

use thiserror::Error;

use crate::exponent::Exponent;
use crate::monomial::Monomial;
use crate::ring::RingElem;
use crate::rpoly::RPoly;
use crate::scalar::{FieldScalar, Prime};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Scanner<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    prime: Prime,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str, prime: Prime) -> Scanner<'a> {
        Scanner {
            text,
            bytes: text.as_bytes(),
            pos: 0,
            prime,
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            self.error(format!("expected '{}'", c as char))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a number");
        }
        self.text[start..self.pos]
            .parse::<u64>()
            .map_err(|_| ParseError {
                position: start,
                message: "number too large".into(),
            })
    }

    /// `x<k>` followed by an optional `^(<num>/<den>)`.
    fn var_power(&mut self) -> Result<(u32, Exponent), ParseError> {
        self.expect(b'x')?;
        let index_pos = self.pos;
        let index = self.number()?;
        let index = u32::try_from(index).map_err(|_| ParseError {
            position: index_pos,
            message: "variable index too large".into(),
        })?;
        if !self.eat(b'^') {
            return Ok((index, Exponent::one()));
        }
        self.expect(b'(')?;
        let num_pos = self.pos;
        let num = self.number()?;
        let den = if self.eat(b'/') {
            let den_pos = self.pos;
            let den = self.number()?;
            if den == 0 {
                return Err(ParseError {
                    position: den_pos,
                    message: "zero denominator".into(),
                });
            }
            den
        } else {
            1
        };
        self.expect(b')')?;
        if num == 0 {
            return Err(ParseError {
                position: num_pos,
                message: "zero exponents forbidden in monomials; write the scalar instead".into(),
            });
        }
        Ok((index, Exponent::new(num, den)))
    }

    fn monomial(&mut self) -> Result<Monomial, ParseError> {
        let mut pairs = Vec::new();
        while self.peek() == Some(b'x') {
            pairs.push(self.var_power()?);
        }
        if pairs.is_empty() {
            return self.error("expected a monomial");
        }
        Ok(Monomial::from_pairs(pairs))
    }

    /// One term: scalar, monomial, or scalar ['*'] monomial.
    fn term(&mut self) -> Result<RingElem, ParseError> {
        let next = self.peek();
        if next.is_some_and(|c| c.is_ascii_digit()) {
            let scalar = FieldScalar::new(self.number()?, self.prime);
            let has_star = self.eat(b'*');
            if has_star || self.peek() == Some(b'x') {
                let m = self.monomial()?;
                return Ok(RingElem::from_monomial(m, scalar));
            }
            return Ok(RingElem::scalar(scalar));
        }
        if next == Some(b'x') {
            let m = self.monomial()?;
            return Ok(RingElem::from_monomial(m, FieldScalar::one(self.prime)));
        }
        self.error("expected a term")
    }

    fn element(&mut self) -> Result<RingElem, ParseError> {
        let mut out = self.term()?;
        while self.eat(b'+') {
            out = out.add(&self.term()?);
        }
        Ok(out)
    }

    /// `(<element>)` with an optional `t` or `t^<k>`.
    fn poly_term(&mut self) -> Result<RPoly, ParseError> {
        self.expect(b'(')?;
        let coeff = self.element()?;
        self.expect(b')')?;
        if !self.eat(b't') {
            return Ok(RPoly::constant(coeff));
        }
        let degree = if self.eat(b'^') {
            let pos = self.pos;
            usize::try_from(self.number()?).map_err(|_| ParseError {
                position: pos,
                message: "degree too large".into(),
            })?
        } else {
            1
        };
        Ok(RPoly::term(coeff, degree))
    }

    fn polynomial(&mut self) -> Result<RPoly, ParseError> {
        let mut out = self.poly_term()?;
        while self.eat(b'+') {
            out = out.add(&self.poly_term()?);
        }
        Ok(out)
    }
}

/// Parses the element syntax into canonical form.
pub fn parse_element(text: &str, prime: Prime) -> Result<RingElem, ParseError> {
    let mut s = Scanner::new(text, prime);
    let out = s.element()?;
    if !s.at_end() {
        return s.error("unexpected trailing input");
    }
    Ok(out)
}

/// Parses the polynomial syntax (parenthesized coefficients with `t`
/// powers); input without a leading `(` is read as a bare element of
/// degree 0.
pub fn parse_rpoly(text: &str, prime: Prime) -> Result<RPoly, ParseError> {
    let mut s = Scanner::new(text, prime);
    if s.peek() == Some(b'(') {
        let out = s.polynomial()?;
        if !s.at_end() {
            return s.error("unexpected trailing input");
        }
        Ok(out)
    } else {
        parse_element(text, prime).map(RPoly::constant)
    }
}

impl fmt::Debug for Scanner<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scanner at {} of {:?}", self.pos, self.text)
    }
}
