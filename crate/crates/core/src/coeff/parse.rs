//! Parsing of scalar expressions such as `t^2 - 1/2*t + 3` and field tags.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{Field, Scalar};
use crate::error::{Error, Result};

/// Parses a field tag: `q`, `qt`, `qt:a`, `fp:5` or `fp:5:a`.
pub fn parse_field(s: &str) -> Result<Field> {
    let parts: Vec<&str> = s.trim().split(':').collect();
    let var = |i: usize, default: char| -> Result<char> {
        match parts.get(i) {
            None => Ok(default),
            Some(v) => {
                let mut cs = v.chars();
                match (cs.next(), cs.next()) {
                    (Some(c), None) if c.is_ascii_alphabetic() => Ok(c),
                    _ => Err(Error::Parse(format!("bad indeterminate `{v}`"))),
                }
            }
        }
    };
    match parts[0] {
        "q" if parts.len() == 1 => Ok(Field::Rational),
        "qt" if parts.len() <= 2 => Ok(Field::RatFuncQ(var(1, 't')?)),
        "fp" if (2..=3).contains(&parts.len()) => {
            let p: u64 = parts[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad prime `{}`", parts[1])))?;
            if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            Ok(Field::RatFuncFp(p, var(2, 'a')?))
        }
        _ => Err(Error::Parse(format!("unknown field `{s}`"))),
    }
}

/// Parses a scalar expression in `field`.
pub fn parse_scalar(s: &str, field: Field) -> Result<Scalar> {
    let mut p = Parser { chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, field };
    let v = p.expr()?;
    if p.pos != p.chars.len() {
        return Err(Error::Parse(format!("trailing input in `{s}`")));
    }
    // rational results stay rational; everything else lands in `field`
    if v.field() == super::Field::Rational {
        Ok(v)
    } else {
        v.in_field(field)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    field: Field,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        while let Some(c @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.checked_add(&rhs)? } else { acc.checked_sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.factor()?;
        while let Some(c @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = if c == '*' { acc.checked_mul(&rhs)? } else { acc.checked_div(&rhs)? };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Scalar> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.digits()?;
            let e: u32 = e.try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(Error::Parse("unbalanced parenthesis".into()));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(Scalar::rational(BigRational::from_integer(self.digits()?))),
            Some(c) if Some(c) == self.field.var() => {
                self.pos += 1;
                Ok(Scalar::var(self.field))
            }
            other => Err(Error::Parse(format!("unexpected {other:?} in scalar expression"))),
        }
    }
}
