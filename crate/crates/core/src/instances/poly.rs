//! Q[x]: dense polynomials with exact rational coefficients.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{Int, Rat};
use crate::ring::{BezoutDomain, GcdCert, RingKind, Shape};

/// Polynomial over Q, ascending coefficients, highest stored coefficient
/// nonzero. The empty list is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_integer(Int::from(c))).collect())
    }

    /// `x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.push(c);
        Poly::new(coeffs)
    }

    pub fn x() -> Self {
        Poly::monomial(Rat::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&lead.recip()),
            None => Poly::zero(),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    /// Euclidean division `(q, r)` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::grammar::write_terms(f, self.coeffs.iter().cloned().enumerate())
    }
}

impl BezoutDomain for Poly {
    const KIND: RingKind = RingKind::RationalPolynomials;

    fn zero_like(&self) -> Self {
        Poly::zero()
    }

    fn one_like(&self) -> Self {
        Poly::constant(Rat::one())
    }

    fn from_int_like(&self, n: &Int) -> Self {
        Poly::constant(Rat::from_integer(n.clone()))
    }

    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn negate(&self) -> Self {
        self.neg()
    }

    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }

    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    fn unit_inverse(&self) -> Result<Self> {
        if self.is_unit() {
            Ok(Poly::constant(self.coeffs[0].recip()))
        } else {
            Err(Error::NotAUnit(self.to_string()))
        }
    }

    fn split_unit(&self) -> Result<(Self, Self)> {
        match self.leading() {
            None => Ok((Poly::zero(), self.one_like())),
            Some(lead) => Ok((self.monic(), Poly::constant(lead.clone()))),
        }
    }

    /// Monic Euclidean algorithm over Q.
    fn gcd_ext(&self, other: &Self) -> Result<GcdCert<Self>> {
        if self.is_zero() && other.is_zero() {
            let z = Poly::zero();
            return Ok(GcdCert { g: z.clone(), u: z.clone(), v: z.clone(), a1: z.clone(), b1: z });
        }
        let (mut old_r, mut r) = (self.clone(), other.clone());
        let (mut old_s, mut s) = (self.one_like(), Poly::zero());
        let (mut old_t, mut t) = (Poly::zero(), self.one_like());
        while !r.is_zero() {
            let (q, rem) = old_r.div_rem(&r)?;
            old_r = std::mem::replace(&mut r, rem);
            let next_s = old_s.add(&q.mul(&s).neg());
            old_s = std::mem::replace(&mut s, next_s);
            let next_t = old_t.add(&q.mul(&t).neg());
            old_t = std::mem::replace(&mut t, next_t);
        }
        let inv = old_r.leading().expect("nonzero gcd").recip();
        let g = old_r.scale(&inv);
        let u = old_s.scale(&inv);
        let v = old_t.scale(&inv);
        let a1 = self.div_exact(&g)?;
        let b1 = other.div_exact(&g)?;
        Ok(GcdCert { g, u, v, a1, b1 })
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            })
        }
    }

    fn shape(&self) -> Result<Shape> {
        Ok(match self.degree() {
            None => Shape::Zero,
            Some(0) => Shape::Unit,
            Some(degree) => Shape::Polynomial { degree },
        })
    }
}
