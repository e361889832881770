//! Parser for polynomial expressions such as `x^2+1` or `(1+t)/2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::QPoly;
use crate::error::{Error, Result};

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    var: char,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at position {} in {:?}", self.pos, self.src))
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.power()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.power()?;
                    if d.degree() != Some(0) {
                        return Err(self.err("division by a non-constant"));
                    }
                    acc = acc.scale(&d.coeff(0).recip());
                }
                Some(c) if c == self.var || c == '(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.integer()?;
            let e = e.to_u32().ok_or_else(|| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c == self.var => {
                self.pos += 1;
                Ok(QPoly::x())
            }
            Some(c) if c.is_ascii_digit() => Ok(QPoly::constant(BigRational::from_integer(self.integer()?))),
            Some('-') => {
                self.pos += 1;
                Ok(self.power()?.neg())
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

/// Parses a polynomial expression in the single variable `var`.
pub fn parse_poly(src: &str, var: char) -> Result<QPoly> {
    let mut p = Parser { chars: src.chars().collect(), pos: 0, var, src };
    if p.peek().is_none() {
        return Err(Error::Parse("empty expression".into()));
    }
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parses a comma separated list of expressions.
pub fn parse_list(src: &str, var: char) -> Result<Vec<QPoly>> {
    src.split(',').map(|s| parse_poly(s, var)).collect()
}

/// Parses a rational written as `p/q` or `p`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: BigInt = d.parse().map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

pub fn rational_to_string(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::IntPolynomial;

    #[test]
    fn parses_polynomials() {
        assert_eq!(parse_poly("x^2+1", 'x').unwrap(), IntPolynomial::from_i64(&[1, 0, 1]).to_rational());
        assert_eq!(parse_poly("x^2 - x", 'x').unwrap(), IntPolynomial::from_i64(&[0, -1, 1]).to_rational());
        assert_eq!(parse_poly("-3 + 2x^3", 'x').unwrap(), IntPolynomial::from_i64(&[-3, 0, 0, 2]).to_rational());
        assert_eq!(parse_poly("(1+t)^2", 't').unwrap(), IntPolynomial::from_i64(&[1, 2, 1]).to_rational());
        let half = parse_poly("(1+t)/2", 't').unwrap();
        assert_eq!(half.coeff(1), BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_list("2, 1+t", 't').unwrap().len(), 2);
        assert!(parse_poly("x^2+", 'x').is_err());
        assert!(parse_poly("1/t", 't').is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-3/6").unwrap(), BigRational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(rational_to_string(&BigRational::new(3.into(), 1.into())), "3");
    }
}
