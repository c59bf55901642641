use num_bigint::BigInt;

use super::poly::LaurentPolynomial;
use super::ratfun::RationalFunction;
use super::rational::Rational;
use crate::{Error, Result};

/// Parse an expression over `x1, x2, …` with `+ - * / ^` and parentheses.
///
/// This accepts the canonical serialized forms of both polynomials and
/// rational functions (so `parse ∘ serialize` is the identity) as well as
/// free-form input like `x1/(x1+x2)`.
pub fn parse_rational_function(text: &str) -> Result<RationalFunction> {
    let mut p = Parser { bytes: text.as_bytes(), pos: 0 };
    p.skip_ws();
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(v)
}

/// Parse text that denotes a Laurent polynomial (denominator reduces to a
/// constant, possibly after clearing monomial content).
pub fn parse_polynomial(text: &str) -> Result<LaurentPolynomial> {
    let rf = parse_rational_function(text)?.gcd_reduce();
    match rf.denominator().as_constant() {
        Some(c) => Ok(rf.numerator().scale(&(Rational::new(1.into(), 1.into()) / c))),
        None => Err(Error::Parse {
            offset: 0,
            message: "expression is not a Laurent polynomial".into(),
        }),
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
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

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(b'-') => {
                    self.pos += 1;
                    self.skip_ws();
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    self.skip_ws();
                    let u = self.unary()?;
                    acc = acc.mul(&u);
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let u = self.unary()?;
                    acc = acc.div(&u).map_err(|_| self.error("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        self.skip_ws();
        if self.eat(b'-') {
            self.skip_ws();
            let u = self.unary()?;
            return Ok(u.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.primary()?;
        self.skip_ws();
        if self.eat(b'^') {
            self.skip_ws();
            let e = self.signed_int()?;
            return base.powi(e).map_err(|_| self.error("cannot raise zero to a negative power"));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<RationalFunction> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                if !self.eat(b')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(v)
            }
            Some(b'x') => {
                self.pos += 1;
                let idx = self.unsigned_int()?;
                if idx == 0 {
                    return Err(self.error("variable indices start at 1"));
                }
                let v = (idx - 1) as usize;
                Ok(RationalFunction::var(v, v + 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.bigint()?;
                Ok(RationalFunction::constant(
                    Rational::from_integer(n),
                    0,
                ))
            }
            _ => Err(self.error("expected '(', variable, or number")),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let neg = self.eat(b'-');
        let n = self.unsigned_int()?;
        Ok(if neg { -(n as i64) } else { n as i64 })
    }

    fn unsigned_int(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<u64>()
            .map_err(|_| self.error("integer out of range"))
    }

    fn bigint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().map(|c| c.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse::<BigInt>()
            .unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat_int, Monomial};

    #[test]
    fn parse_canonical_forms() {
        let p = parse_polynomial("1 - 2*x1").unwrap();
        assert_eq!(p, LaurentPolynomial::one_minus_twice(0, 1));

        let q = parse_polynomial("x1^-1 + x2").unwrap();
        let expect = LaurentPolynomial::monomial(Monomial::new(vec![-1, 0]), rat_int(1))
            .add(&LaurentPolynomial::var(1, 2));
        assert_eq!(q, expect);
    }

    #[test]
    fn parse_error_offset() {
        match parse_rational_function("1 -") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parse_free_form() {
        let f = parse_rational_function("x1/(x1+x2)").unwrap();
        let expect = RationalFunction::new(
            LaurentPolynomial::var(0, 2),
            LaurentPolynomial::var(0, 2).add(&LaurentPolynomial::var(1, 2)),
        )
        .unwrap();
        assert_eq!(f, expect);
    }

    #[test]
    fn roundtrip_display() {
        for text in ["1 - 2*x1", "x1^-1 + x2", "1/2*x1 + 3*x2^2", "-1 + x1"] {
            let p = parse_polynomial(text).unwrap();
            assert_eq!(p.to_string(), text);
        }
        let rf = parse_rational_function("(1 - 2*x1)/(x1 + x2)").unwrap();
        assert_eq!(parse_rational_function(&rf.to_string()).unwrap(), rf);
    }
}
