//! Text form of polynomials: `3/2*x^2*y - z + 1`.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Coeff, Polynomial};
use crate::combinat::{Exponent, TermOrder};
use crate::error::{Error, Result};

const SHORT_NAMES: [&str; 7] = ["x", "y", "z", "t", "u", "v", "w"];

/// Variable names used when a ring declares none: `x y z t u v w`, or `x1..xn` beyond seven.
pub fn default_names(n: usize) -> Vec<String> {
    if n <= SHORT_NAMES.len() {
        SHORT_NAMES[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

/// Parses a polynomial over the named variables. Error columns are 1-based.
pub fn parse_polynomial(src: &str, names: &[String], order: TermOrder) -> Result<Polynomial> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, names };
    let terms = p.polynomial()?;
    Ok(Polynomial::from_terms(names.len(), order, terms))
}

/// Parses a single monomial such as `x^2*z`.
pub fn parse_monomial(src: &str, names: &[String]) -> Result<Exponent> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, names };
    p.skip_ws();
    let e = p.monomial()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [String],
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { line: 1, column: self.pos + 1, message: message.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    // '-' or U+2212
    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Some(true)
            }
            Some(b'-') => {
                self.pos += 1;
                Some(false)
            }
            Some(0xE2) if self.src[self.pos..].starts_with("−".as_bytes()) => {
                self.pos += "−".len();
                Some(false)
            }
            _ => None,
        }
    }

    fn polynomial(&mut self) -> Result<Vec<(Exponent, Coeff)>> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.pos == self.src.len() {
            return Err(self.error("empty polynomial"));
        }
        let mut positive = self.sign().unwrap_or(true);
        loop {
            self.skip_ws();
            let (e, c) = self.term()?;
            terms.push((e, if positive { c } else { -c }));
            self.skip_ws();
            if self.pos == self.src.len() {
                return Ok(terms);
            }
            positive = self.sign().ok_or_else(|| self.error("expected '+' or '-'"))?;
        }
    }

    fn term(&mut self) -> Result<(Exponent, Coeff)> {
        let n = self.names.len();
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let c = self.rational()?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                return Ok((self.monomial()?, c));
            }
            return Ok((Exponent::zero(n), c));
        }
        Ok((self.monomial()?, Coeff::one()))
    }

    fn rational(&mut self) -> Result<Coeff> {
        let num = self.integer()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn monomial(&mut self) -> Result<Exponent> {
        let mut v = vec![0u32; self.names.len()];
        loop {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_') {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.error("expected a variable"));
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            let Some(k) = self.names.iter().position(|x| x == name) else {
                self.pos = start;
                return Err(self.error(&format!("unknown variable '{name}'")));
            };
            self.skip_ws();
            let mut power = 1u32;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(b'-') {
                    return Err(self.error("negative exponent"));
                }
                let p = self.integer()?;
                power = u32::try_from(p).map_err(|_| self.error("exponent too large"))?;
            }
            v[k] += power;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(Exponent::new(v));
            }
        }
    }
}

/// `x^2*y`, or `1` for the empty monomial.
pub fn format_monomial(e: &Exponent, names: &[String]) -> String {
    let mut out = String::new();
    for (k, &a) in e.entries().iter().enumerate() {
        if a == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        out.push_str(&names[k]);
        if a > 1 {
            write!(out, "^{a}").unwrap();
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// Canonical text: terms descending in rlex, `" + "`/`" - "` separators.
pub fn format_polynomial(f: &Polynomial, names: &[String]) -> String {
    let f = f.with_order(TermOrder::Rlex);
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (e, c)) in f.terms().iter().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if e.is_zero() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                write!(out, "{a}*").unwrap();
            }
            out.push_str(&format_monomial(e, names));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::poly::int;

    fn names() -> Vec<String> {
        default_names(4)
    }

    #[test]
    fn round_trip() {
        for s in ["y^2 - x*z", "x^2", "y^2*t - x*z*t", "z^3 + 3/2*x*y - 7", "-x + 1", "0"] {
            let f = parse_polynomial(s, &names(), TermOrder::Rlex).unwrap();
            assert_eq!(format_polynomial(&f, &names()), s);
        }
    }

    #[test]
    fn canonical_order_is_rlex() {
        let f = parse_polynomial("-x*z + y^2", &names(), TermOrder::Hlex).unwrap();
        assert_eq!(f.leading_exponent().unwrap().entries(), &[1, 0, 1, 0]);
        assert_eq!(format_polynomial(&f, &names()), "y^2 - x*z");
    }

    #[test]
    fn unicode_minus_and_spacing() {
        let f = parse_polynomial("y ^ 2 − x * z", &names(), TermOrder::Rlex).unwrap();
        assert_eq!(f.coefficient(&Exponent::new([1, 0, 1, 0])), int(-1));
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_polynomial("x^-1", &names(), TermOrder::Rlex).unwrap_err();
        assert!(matches!(err, Error::Parse { column: 3, .. }), "{err:?}");
        let err = parse_polynomial("x + q", &names(), TermOrder::Rlex).unwrap_err();
        assert!(matches!(err, Error::Parse { column: 5, .. }), "{err:?}");
        assert!(parse_polynomial("x y", &names(), TermOrder::Rlex).is_err());
        assert!(parse_polynomial("1/0*x", &names(), TermOrder::Rlex).is_err());
        assert!(parse_polynomial("", &names(), TermOrder::Rlex).is_err());
    }

    #[test]
    fn monomials() {
        let e = parse_monomial("x^2*z", &names()).unwrap();
        assert_eq!(e.entries(), &[2, 0, 1, 0]);
        assert_eq!(format_monomial(&e, &names()), "x^2*z");
        assert_eq!(default_names(8)[7], "x8");
    }
}
