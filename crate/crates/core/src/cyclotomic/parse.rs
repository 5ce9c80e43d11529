//! Parser for the printed scalar syntax: `A^6 + 1 + A^-6`, `-2*A^3`,
//! `(A^3 + 1)/(A^6 + 1)`, `(3*A - 1)/4`. A trailing `≈ …` numeric
//! annotation is ignored.

use num_bigint::BigInt;

use super::LaurentPoly;
use crate::error::Error;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of scalar", self.pos))
    }

    fn integer(&mut self) -> Result<BigInt, Error> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<i64, Error> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let neg = self.eat(b'-');
        let e: i64 = self
            .integer()?
            .try_into()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -e } else { e })
    }

    fn term(&mut self) -> Result<(i64, BigInt), Error> {
        match self.peek() {
            Some(b'A') => {
                self.pos += 1;
                Ok((self.exponent()?, BigInt::from(1)))
            }
            Some(c) if c.is_ascii_digit() => {
                let c = self.integer()?;
                if self.eat(b'*') {
                    if !self.eat(b'A') {
                        return Err(self.err("expected A after *"));
                    }
                    Ok((self.exponent()?, c))
                } else if self.peek() == Some(b'A') {
                    self.pos += 1;
                    Ok((self.exponent()?, c))
                } else {
                    Ok((0, c))
                }
            }
            _ => Err(self.err("expected a term")),
        }
    }

    fn poly(&mut self) -> Result<LaurentPoly, Error> {
        let mut terms = Vec::new();
        let mut sign = if self.eat(b'-') { -1 } else { 1 };
        loop {
            let (e, c) = self.term()?;
            terms.push((e, c * sign));
            if self.eat(b'+') {
                sign = 1;
            } else if self.eat(b'-') {
                sign = -1;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn atom(&mut self) -> Result<LaurentPoly, Error> {
        if self.eat(b'(') {
            let p = self.poly()?;
            if !self.eat(b')') {
                return Err(self.err("expected )"));
            }
            Ok(p)
        } else {
            self.poly()
        }
    }
}

/// Parses `num` or `num/den` into Laurent polynomials.
pub fn parse_fraction(text: &str) -> Result<(LaurentPoly, LaurentPoly), Error> {
    let text = text.split('≈').next().unwrap_or("");
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let num = cur.atom()?;
    let den = if cur.eat(b'/') {
        cur.atom()?
    } else {
        LaurentPoly::one()
    };
    if cur.peek().is_some() {
        return Err(cur.err("trailing input"));
    }
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok((num, den))
}
