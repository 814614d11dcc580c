//! Dense univariate polynomials over ℚ or 𝔽_p.
//!
//! Coefficients are stored low degree first with no trailing zeros, so the
//! zero polynomial is the empty vector. Over 𝔽_p every coefficient is kept as
//! an integer in `0..p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficient ring of a polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ring {
    Q,
    Fp(u64),
}

impl Ring {
    pub(crate) fn reduce(self, c: BigRational) -> BigRational {
        match self {
            Ring::Q => c,
            Ring::Fp(p) => {
                let p = BigInt::from(p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p).expect("denominator divisible by p");
                BigRational::from_integer((num * inv).mod_floor(&p))
            }
        }
    }

    /// Whether `c` can be mapped into this ring (denominator invertible).
    pub(crate) fn admits(self, c: &BigRational) -> bool {
        match self {
            Ring::Q => true,
            Ring::Fp(p) => !c.denom().mod_floor(&BigInt::from(p)).is_zero(),
        }
    }

    pub(crate) fn inv(self, c: &BigRational) -> BigRational {
        match self {
            Ring::Q => c.recip(),
            Ring::Fp(p) => {
                let p = BigInt::from(p);
                BigRational::from_integer(mod_inverse(&c.to_integer(), &p).expect("zero has no inverse"))
            }
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(p).extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn var() -> Self {
        Poly::from_coeffs(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub(crate) fn reduced(self, ring: Ring) -> Self {
        match ring {
            Ring::Q => self,
            Ring::Fp(_) => Poly::from_coeffs(self.coeffs.into_iter().map(|c| ring.reduce(c)).collect()),
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, other: &Poly, ring: Ring) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = BigRational::zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                ring.reduce(a + b)
            })
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn neg(&self, ring: Ring) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| ring.reduce(-c)).collect())
    }

    pub fn sub(&self, other: &Poly, ring: Ring) -> Poly {
        self.add(&other.neg(ring), ring)
    }

    pub fn mul(&self, other: &Poly, ring: Ring) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out).reduced(ring)
    }

    pub fn scale(&self, c: &BigRational, ring: Ring) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| ring.reduce(a * c)).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly, ring: Ring) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lead_inv = ring.inv(divisor.leading().unwrap());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = ring.reduce(&rem[k + dd] * &lead_inv);
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = ring.reduce(&rem[k + j] - &c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    pub fn monic(&self, ring: Ring) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&ring.inv(l), ring),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly, ring: Ring) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b, ring);
            a = b;
            b = r.monic(ring);
        }
        a.monic(ring)
    }

    pub fn eval(&self, x: &BigRational, ring: Ring) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = ring.reduce(acc * x + c);
        }
        acc
    }

    /// Rational roots of a polynomial over ℚ, without multiplicity, ascending.
    pub fn rational_roots(&self) -> Vec<BigRational> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        // clear denominators to get an integer polynomial
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let shift = ints.iter().take_while(|c| c.is_zero()).count();
        let ints = &ints[shift..];
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(BigRational::zero());
        }
        if ints.len() > 1 {
            let a0 = ints[0].abs();
            let an = ints.last().unwrap().abs();
            for p in divisors(&a0) {
                for q in divisors(&an) {
                    for sign in [1, -1] {
                        let r = BigRational::new(BigInt::from(sign) * &p, q.clone());
                        if self.eval(&r, Ring::Q).is_zero() && !roots.contains(&r) {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let e = n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    #[test]
    fn div_rem_recovers_dividend() {
        let a = p(&[-6, 11, -6, 1]);
        let b = p(&[-1, 1]);
        let (q, r) = a.div_rem(&b, Ring::Q);
        assert!(r.is_zero());
        assert_eq!(q, p(&[6, -5, 1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = p(&[0, -2, 2]); // 2t^2 - 2t
        let b = p(&[0, 3]); // 3t
        assert_eq!(a.gcd(&b, Ring::Q), p(&[0, 1]));
    }

    #[test]
    fn fp_reduction() {
        let a = p(&[7, 5]).reduced(Ring::Fp(5));
        assert_eq!(a, p(&[2]));
        let inv = Ring::Fp(7).inv(&BigRational::from_integer(3.into()));
        assert_eq!(inv, BigRational::from_integer(5.into()));
    }

    #[test]
    fn rational_roots_of_falling_factorial() {
        // t(t-1)(t-2)
        let f = p(&[0, 2, -3, 1]);
        let roots: Vec<i64> = f
            .rational_roots()
            .iter()
            .map(|r| r.to_integer().try_into().unwrap())
            .collect();
        assert_eq!(roots, vec![0, 1, 2]);
    }
}
