//! Text grammar:
//!
//! ```text
//! poly    := sign? term (('+'|'-') term)*
//! term    := coeff ('*' varpow)* | varpow ('*' varpow)*
//! varpow  := var ('^' uint)?
//! coeff   := int ('/' uint)?
//! ```
//!
//! Whitespace between tokens is ignored.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{rat, Monomial, Polynomial, Rational, Ring};
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { src: text.as_bytes(), pos: 0 }
    }

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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        let ok_first = |c: u8| c.is_ascii_alphabetic() || c == b'_';
        if self.pos < self.src.len() && ok_first(self.src[self.pos]) {
            self.pos += 1;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident"))
        } else {
            None
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

fn parse_coeff(cur: &mut Cursor<'_>) -> Result<Rational> {
    let num = cur.digits()?;
    if cur.eat(b'/') {
        let den = cur.digits()?;
        if den.is_zero() {
            return cur.err("zero denominator");
        }
        Ok(Rational::new(num, den))
    } else {
        Ok(Rational::from_integer(num))
    }
}

fn parse_varpow(cur: &mut Cursor<'_>, ring: &Ring, exps: &mut [u32]) -> Result<()> {
    let start = {
        cur.skip_ws();
        cur.pos
    };
    let name = match cur.ident() {
        Some(n) => n,
        None => return cur.err("expected variable"),
    };
    let idx = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
    let e = if cur.eat(b'^') {
        let d = cur.digits()?;
        u32::try_from(d).map_err(|_| Error::Syntax { pos: start, msg: "exponent too large".into() })?
    } else {
        1
    };
    exps[idx] += e;
    Ok(())
}

fn parse_term(cur: &mut Cursor<'_>, ring: &Ring) -> Result<(Monomial, Rational)> {
    let mut exps = vec![0u32; ring.nvars()];
    let coeff = match cur.peek() {
        Some(c) if c.is_ascii_digit() => parse_coeff(cur)?,
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
            parse_varpow(cur, ring, &mut exps)?;
            rat(1)
        }
        Some(_) => return cur.err("expected term"),
        None => return cur.err("unexpected end of input"),
    };
    while cur.eat(b'*') {
        parse_varpow(cur, ring, &mut exps)?;
    }
    Ok((Monomial::new(exps), coeff))
}

pub(super) fn parse_polynomial(text: &str, ring: &Ring) -> Result<Polynomial> {
    let mut cur = Cursor::new(text);
    let mut out = ring.zero();
    let mut negate = if cur.eat(b'-') {
        true
    } else {
        cur.eat(b'+');
        false
    };
    loop {
        let (m, c) = parse_term(&mut cur, ring)?;
        out.add_term(m, if negate { -c } else { c });
        if cur.at_end() {
            break;
        }
        negate = match cur.peek() {
            Some(b'+') => false,
            Some(b'-') => true,
            _ => return cur.err("expected '+' or '-'"),
        };
        cur.pos += 1;
    }
    Ok(out)
}

/// Parses `[-]int[/uint]`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let mut cur = Cursor::new(text);
    let neg = cur.eat(b'-');
    let q = parse_coeff(&mut cur)?;
    if !cur.at_end() {
        return cur.err("trailing characters after rational");
    }
    Ok(if neg { -q } else { q })
}
