//! Exact scalars: ℚ, ℚ(t) and 𝔽_p(t), always kept in canonical form.
//!
//! A [`Scalar`] is a reduced fraction of polynomials with a monic denominator.
//! Rational numbers are constant fractions with denominator 1, so equality of
//! canonical forms is equality of values. Rational constants embed into every
//! rational-function field (over 𝔽_p whenever the denominator is prime to p),
//! which lets structural matrices with 0/1 entries mix with measure values.

mod parse;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use parse::{parse_field, parse_scalar};
pub use poly::{Poly, Ring};

/// The coefficient field a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    RatFuncQ(char),
    RatFuncFp(u64, char),
}

impl Field {
    pub fn ring(self) -> Ring {
        match self {
            Field::Rational | Field::RatFuncQ(_) => Ring::Q,
            Field::RatFuncFp(p, _) => Ring::Fp(p),
        }
    }

    pub fn var(self) -> Option<char> {
        match self {
            Field::Rational => None,
            Field::RatFuncQ(v) | Field::RatFuncFp(_, v) => Some(v),
        }
    }

    /// The same coefficient ring with a different indeterminate.
    pub fn with_var(self, var: char) -> Field {
        match self {
            Field::Rational | Field::RatFuncQ(_) => Field::RatFuncQ(var),
            Field::RatFuncFp(p, _) => Field::RatFuncFp(p, var),
        }
    }

    fn common(self, other: Field) -> Result<Field> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (Field::Rational, b) => Ok(b),
            (a, Field::Rational) => Ok(a),
            (a, b) => Err(Error::FieldMismatch(a.to_string(), b.to_string())),
        }
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::RatFuncQ(v) => write!(f, "Q({v})"),
            Field::RatFuncFp(p, v) => write!(f, "F_{p}({v})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Scalar {
    field: Field,
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { field: Field::Rational, num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn rational(q: BigRational) -> Self {
        Scalar { field: Field::Rational, num: Poly::constant(q), den: Poly::one() }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::rational(BigRational::new(n.into(), d.into()))
    }

    /// The indeterminate of a rational-function field.
    pub fn var(field: Field) -> Self {
        assert!(field.var().is_some(), "{field} has no indeterminate");
        Scalar { field, num: Poly::var(), den: Poly::one() }
    }

    pub fn from_poly(field: Field, num: Poly) -> Self {
        Scalar::from_fraction(field, num, Poly::one()).expect("denominator 1")
    }

    /// Builds `num / den` in canonical form.
    pub fn from_fraction(field: Field, num: Poly, den: Poly) -> Result<Self> {
        if field == Field::Rational && !(num.is_constant() && den.is_constant()) {
            return Err(Error::FieldMismatch("polynomial".into(), field.to_string()));
        }
        let ring = field.ring();
        let num = num.reduced(ring);
        let den = den.reduced(ring);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(field, num, den))
    }

    fn canonical(field: Field, num: Poly, den: Poly) -> Self {
        let ring = field.ring();
        if num.is_zero() {
            return Scalar { field, num, den: Poly::one() };
        }
        if den.is_one() {
            return Scalar { field, num, den };
        }
        let g = num.gcd(&den, ring);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g, ring).0, den.div_rem(&g, ring).0)
        };
        let lead = den.leading().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            let scale = ring.inv(&lead);
            num = num.scale(&scale, ring);
            den = den.scale(&scale, ring);
        }
        Scalar { field, num, den }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational number, when it is constant over ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.field.ring() == Ring::Q && self.num.is_constant() && self.den.is_one() {
            Some(self.num.constant_term())
        } else {
            None
        }
    }

    /// Moves the scalar into `field`, embedding rational constants.
    pub fn in_field(&self, field: Field) -> Result<Scalar> {
        if self.field == field {
            return Ok(self.clone());
        }
        let mismatch = || Error::FieldMismatch(self.field.to_string(), field.to_string());
        if self.field != Field::Rational || field == Field::Rational {
            return Err(mismatch());
        }
        let c = self.num.constant_term();
        if !field.ring().admits(&c) {
            return Err(mismatch());
        }
        Ok(Scalar::canonical(field, Poly::constant(c).reduced(field.ring()), Poly::one()))
    }

    fn lift(&self, other: &Scalar) -> Result<(Field, Scalar, Scalar)> {
        let field = self.field.common(other.field)?;
        Ok((field, self.in_field(field)?, other.in_field(field)?))
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        let (field, a, b) = self.lift(other)?;
        let ring = field.ring();
        if a.den == b.den {
            let num = a.num.add(&b.num, ring);
            return Ok(Scalar::canonical(field, num, a.den));
        }
        let num = a.num.mul(&b.den, ring).add(&b.num.mul(&a.den, ring), ring);
        Ok(Scalar::canonical(field, num, a.den.mul(&b.den, ring)))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        let (field, a, b) = self.lift(other)?;
        let ring = field.ring();
        if a.is_zero() || b.is_zero() {
            return Ok(Scalar { field, num: Poly::zero(), den: Poly::one() });
        }
        if a.den.is_one() && b.den.is_one() {
            return Ok(Scalar { field, num: a.num.mul(&b.num, ring), den: Poly::one() });
        }
        Ok(Scalar::canonical(field, a.num.mul(&b.num, ring), a.den.mul(&b.den, ring)))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn inverse(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Scalar::canonical(self.field, self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Scalar {
        (0..e).fold(Scalar::one(), |acc, _| &acc * self)
    }

    /// Substitutes an integer for the indeterminate of a ℚ(t) scalar.
    pub fn evaluate(&self, n: i64) -> Result<Scalar> {
        self.evaluate_at(&BigRational::from_integer(n.into()))
    }

    pub fn evaluate_at(&self, x: &BigRational) -> Result<Scalar> {
        match self.field {
            Field::Rational => Ok(self.clone()),
            Field::RatFuncQ(_) => {
                let d = self.den.eval(x, Ring::Q);
                if d.is_zero() {
                    return Err(Error::PoleAtPoint(x.to_string()));
                }
                Ok(Scalar::rational(self.num.eval(x, Ring::Q) / d))
            }
            f @ Field::RatFuncFp(..) => {
                Err(Error::FieldMismatch(f.to_string(), Field::Rational.to_string()))
            }
        }
    }

    /// Substitutes a value for the indeterminate, staying in the same field.
    pub fn substitute(&self, x: &BigRational) -> Result<Scalar> {
        let ring = self.field.ring();
        if !ring.admits(x) {
            return Err(Error::FieldMismatch(x.to_string(), self.field.to_string()));
        }
        let x = ring.reduce(x.clone());
        let d = self.den.eval(&x, ring);
        if d.is_zero() {
            return Err(Error::PoleAtPoint(x.to_string()));
        }
        let q = ring.reduce(self.num.eval(&x, ring) * ring.inv(&d));
        match self.field {
            Field::Rational | Field::RatFuncQ(_) => Ok(Scalar::rational(q)),
            field => Ok(Scalar::canonical(field, Poly::constant(q), Poly::one())),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.field == other.field {
            return self.num == other.num && self.den == other.den;
        }
        match self.lift(other) {
            Ok((_, a, b)) => a.num == b.num && a.den == b.den,
            Err(_) => false,
        }
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { field: self.field, num: self.num.neg(self.field.ring()), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |a, b| a * b)
    }
}

fn render_poly(p: &Poly, var: Option<char>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let v = var.unwrap_or('t');
        let mono = match k {
            0 => String::new(),
            1 => v.to_string(),
            _ => format!("{v}^{k}"),
        };
        if k == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{mag}*{mono}"));
        }
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.field.var();
        let num = render_poly(&self.num, var);
        if self.den.is_one() {
            return write!(f, "{num}");
        }
        let den = render_poly(&self.den, var);
        let wrap = |s: String, single: bool| if single { s } else { format!("({s})") };
        let num_single = self.num.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && !num.contains('/');
        let den_single = self.den.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1
            && !den.contains('/')
            && !den.contains('*');
        write!(f, "{}/{}", wrap(num, num_single), wrap(den, den_single))
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
