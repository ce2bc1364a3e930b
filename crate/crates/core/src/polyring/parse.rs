//! Text input for polynomials and ideal files.
//!
//! ```text
//! expr    := ['-'] term (('+'|'-') term)*
//! term    := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow  := VAR ('^' NAT)?
//! coeff   := INT ('/' POSINT)?
//! ```
//! Whitespace is insignificant. Variables are the ring's variable names.

use num_bigint::BigInt;

use super::{Monomial, PolyRing, Polynomial, Scalar};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a PolyRing,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        if !self.src.get(start).is_some_and(|c| c.is_ascii_alphabetic()) {
            return None;
        }
        while self.pos < self.src.len()
            && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
        {
            self.pos += 1;
        }
        Some((
            start,
            std::str::from_utf8(&self.src[start..self.pos]).unwrap(),
        ))
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                None => return Ok(acc),
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let field = self.ring.field();
        let mut coeff = field.one();
        let mut exps = vec![0u16; self.ring.nvars()];
        let mut need_factor = true;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let num: BigInt = self.digits().unwrap().parse().unwrap();
            let mut den = BigInt::from(1);
            if self.peek() == Some(b'/') {
                self.pos += 1;
                match self.digits() {
                    Some(d) => den = d.parse().unwrap(),
                    None => return self.err("expected denominator"),
                }
            }
            coeff = field.from_fraction(&num, &den)?;
            need_factor = false;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                need_factor = true;
            }
        }
        if need_factor {
            loop {
                self.varpow(&mut exps)?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok(Polynomial::term(
            self.ring,
            Monomial::from_exponents(&exps),
            coeff,
        ))
    }

    fn varpow(&mut self, exps: &mut [u16]) -> Result<()> {
        let Some((_, name)) = self.ident() else {
            return self.err("expected variable or coefficient");
        };
        let i = self
            .ring
            .var_index(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let mut e = 1u16;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            match self.digits().and_then(|d| d.parse::<u16>().ok()) {
                Some(v) => e = v,
                None => return self.err("expected exponent"),
            }
        }
        exps[i] += e;
        Ok(())
    }
}

pub fn parse_polynomial(src: &str, ring: &PolyRing) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        ring,
    };
    if p.peek().is_none() {
        return p.err("empty input");
    }
    p.expr()
}

/// Parses a point written as comma-separated field elements, e.g. `1,0,-1/2`.
pub fn parse_point(src: &str, ring: &PolyRing) -> Result<Vec<Scalar>> {
    let point = src
        .split(',')
        .map(|s| {
            let p = parse_polynomial(s, ring)?;
            if p.is_zero() {
                Ok(ring.field().zero())
            } else if p.is_unit() {
                Ok(p.leading_coeff().unwrap().clone())
            } else {
                Err(Error::Syntax {
                    offset: 0,
                    message: format!("`{}` is not a constant", s.trim()),
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;
    if point.len() != ring.nvars() {
        return Err(Error::PointLength {
            expected: ring.nvars(),
            found: point.len(),
        });
    }
    Ok(point)
}

/// Parses an ideal file: a ring header line followed by one polynomial per
/// line. `#` starts a comment.
pub fn parse_ideal_file(text: &str) -> Result<(PolyRing, Vec<Polynomial>)> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidRing("missing ring header".into()))?;
    let ring = PolyRing::parse_header(header)?;
    let gens = lines
        .map(|l| parse_polynomial(l, &ring))
        .collect::<Result<Vec<_>>>()?;
    Ok((ring, gens))
}
