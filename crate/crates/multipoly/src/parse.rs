//! Text front-end for polynomials.
//!
//! Grammar (whitespace insignificant):
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' uint]
//! atom   := variable | number ['/' number] | generator | '(' expr ')'
//! ```
//! Variables are a letter followed by digits (`x0`, `y1`); the extension
//! generator `a` (or Gaussian `i`) is a coefficient atom when the base field
//! has one. Integer literals may have arbitrarily many digits.

use crate::poly::Polynomial;
use crate::ring::RingRef;
use arith::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a, F: Field> {
    input: &'a [u8],
    pos: usize,
    ring: &'a RingRef<F>,
}

pub fn parse_poly<F: Field>(text: &str, ring: &RingRef<F>) -> Result<Polynomial<F>, ParseError> {
    let mut p = Parser {
        input: text.as_bytes(),
        pos: 0,
        ring,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.input.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

impl<'a, F: Field> Parser<'a, F> {
    fn err(&self, msg: &str) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign_negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if sign_negative { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign_negative = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign_negative = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial<F>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // juxtaposition: a factor can start right away
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial<F>, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            if e > u16::MAX as u64 {
                return Err(self.err("exponent too large"));
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<F>, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer_elem()?;
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den_pos = self.pos;
                    let den = self.integer_elem()?;
                    if self.ring.field.is_zero(&den) {
                        return Err(ParseError {
                            pos: den_pos,
                            msg: "denominator is zero in this field".to_string(),
                        });
                    }
                    return Ok(Polynomial::constant(
                        self.ring,
                        self.ring.field.div(&num, &den),
                    ));
                }
                Ok(Polynomial::constant(self.ring, num))
            }
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            _ => Err(self.err("expected a variable, number, or `(`")),
        }
    }

    /// Arbitrary-length decimal literal folded into the field.
    fn integer_elem(&mut self) -> Result<F::Elem, ParseError> {
        self.skip_ws();
        let field = &self.ring.field;
        let ten = field.from_i64(10);
        let mut acc = field.zero();
        let start = self.pos;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            let d = (self.input[self.pos] - b'0') as i64;
            acc = field.add(&field.mul(&acc, &ten), &field.from_i64(d));
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(acc)
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut acc: u64 = 0;
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            acc = acc
                .checked_mul(10)
                .and_then(|a| a.checked_add((self.input[self.pos] - b'0') as u64))
                .ok_or_else(|| self.err("integer overflow"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(acc)
    }

    fn identifier(&mut self) -> Result<Polynomial<F>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        self.pos += 1; // the letter
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        if let Some(i) = self.ring.var_index(name) {
            return Ok(Polynomial::var(self.ring, i));
        }
        if name.len() == 1 {
            let c = name.chars().next().unwrap();
            if self.ring.field.generator_name() == Some(c) {
                let g = self.ring.field.generator().unwrap();
                return Ok(Polynomial::constant(self.ring, g));
            }
        }
        Err(ParseError {
            pos: start,
            msg: format!("unknown variable `{}`", name),
        })
    }
}
