//! The Henriksen ring H = Z + xQ[[x]]: power series with an integer constant
//! term and rational higher coefficients.
//!
//! Elements are either *exact* (finitely many nonzero coefficients, all stored)
//! or *truncated* (coefficients known through `x^prec`). Exact elements carry a
//! working precision that bounds any truncated series derived from them.
//!
//! Every decision (units, associate classes, divisibility, gcd) depends only on
//! the constant term, the order of vanishing and the leading coefficient, all of
//! which are tracked exactly. Truncation only limits how deep a certificate can
//! be checked.

use std::cmp::min;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::instances::poly::Poly;
use crate::numbers::{int_gcd_ext, is_integral, rat_gcd_ext, Int, Rat};
use crate::ring::{BezoutDomain, GcdCert, RingKind, Shape};

pub const DEFAULT_PRECISION: usize = 16;

/// Order of vanishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Zero,
    At(usize),
    /// Truncated series whose known coefficients all vanish; the order lies
    /// beyond the precision.
    Lost,
}

/// Associate class of an element of H.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CanonicalClass {
    Zero,
    Unit,
    /// Associate to the integer `m >= 2`.
    IntClass(Int),
    /// Associate to `c*x^k`, `c > 0`, `k >= 1`.
    JClass(Rat, usize),
}

impl fmt::Display for CanonicalClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalClass::Zero => f.write_str("Zero"),
            CanonicalClass::Unit => f.write_str("Unit"),
            CanonicalClass::IntClass(m) => write!(f, "IntClass({m})"),
            CanonicalClass::JClass(c, k) => write!(f, "JClass({c}, {k})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct HSeries {
    z0: Int,
    /// `coeffs[i]` is the coefficient of `x^(i+1)`.
    coeffs: Vec<Rat>,
    prec: usize,
    exact: bool,
    ord: Order,
}

impl HSeries {
    /// Exact element from its constant term and higher coefficients.
    pub fn exact(z0: Int, coeffs: Vec<Rat>, prec: usize) -> Self {
        Self::build(z0, coeffs, prec, true)
    }

    /// Truncated element known through `x^prec`; missing coefficients are zero.
    pub fn truncated(z0: Int, coeffs: Vec<Rat>, prec: usize) -> Self {
        Self::build(z0, coeffs, prec, false)
    }

    pub fn integer(n: impl Into<Int>, prec: usize) -> Self {
        Self::exact(n.into(), Vec::new(), prec)
    }

    /// `c*x^k`; for `k = 0` the coefficient must be an integer.
    pub fn monomial(c: Rat, k: usize, prec: usize) -> Result<Self> {
        if k == 0 {
            if !is_integral(&c) {
                return Err(Error::parse(0, "constant term of an element of H must be an integer"));
            }
            return Ok(Self::integer(c.to_integer(), prec));
        }
        let mut coeffs = vec![Rat::zero(); k - 1];
        coeffs.push(c);
        Ok(Self::exact(Int::zero(), coeffs, prec))
    }

    pub fn x(prec: usize) -> Self {
        Self::monomial(Rat::one(), 1, prec).expect("x is in H")
    }

    /// Exact element from a dense coefficient list (index 0 is the constant).
    pub fn from_dense(dense: &[Rat], prec: usize) -> Result<Self> {
        let Some(c0) = dense.first() else {
            return Ok(Self::integer(0, prec));
        };
        if !is_integral(c0) {
            return Err(Error::parse(0, "constant term of an element of H must be an integer"));
        }
        Ok(Self::exact(c0.to_integer(), dense[1..].to_vec(), prec))
    }

    fn build(z0: Int, mut coeffs: Vec<Rat>, prec: usize, exact: bool) -> Self {
        if exact {
            while coeffs.last().is_some_and(Zero::is_zero) {
                coeffs.pop();
            }
        } else {
            coeffs.resize(prec, Rat::zero());
        }
        let ord = if !Zero::is_zero(&z0) {
            Order::At(0)
        } else {
            match coeffs.iter().position(|c| !c.is_zero()) {
                Some(i) => Order::At(i + 1),
                None if exact => Order::Zero,
                None => Order::Lost,
            }
        };
        HSeries { z0, coeffs, prec, exact, ord }
    }

    pub fn constant_term(&self) -> &Int {
        &self.z0
    }

    pub fn order(&self) -> Order {
        self.ord
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    /// Degree through which coefficients are known; `None` when exact.
    pub fn known_through(&self) -> Option<usize> {
        if self.exact {
            None
        } else {
            Some(self.prec)
        }
    }

    /// Coefficient of `x^i`, `None` when beyond the known precision.
    pub fn coeff(&self, i: usize) -> Option<Rat> {
        if i == 0 {
            return Some(Rat::from_integer(self.z0.clone()));
        }
        match self.coeffs.get(i - 1) {
            Some(c) => Some(c.clone()),
            None if self.exact => Some(Rat::zero()),
            None => None,
        }
    }

    /// Coefficient of `x^i`, reading unknown coefficients as zero.
    fn coeff_or_zero(&self, i: usize) -> Rat {
        self.coeff(i).unwrap_or_else(Rat::zero)
    }

    pub fn higher_coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient (coefficient at the order), if the order is known.
    pub fn leading(&self) -> Option<Rat> {
        match self.ord {
            Order::At(k) => self.coeff(k),
            _ => None,
        }
    }

    /// Same element with a different working precision (truncating if needed).
    pub fn with_precision(&self, prec: usize) -> Self {
        if self.exact {
            HSeries { prec, ..self.clone() }
        } else {
            let keep = min(prec, self.prec);
            Self::truncated(self.z0.clone(), self.coeffs[..keep].to_vec(), keep)
        }
    }

    /// Largest index stored or known.
    fn span(&self) -> usize {
        if self.exact {
            self.coeffs.len()
        } else {
            self.prec
        }
    }

    fn from_dense_parts(dense: Vec<Rat>, prec: usize, exact: bool) -> Self {
        let mut it = dense.into_iter();
        let c0 = it.next().unwrap_or_else(Rat::zero);
        debug_assert!(is_integral(&c0));
        Self::build(c0.to_integer(), it.collect(), prec, exact)
    }

    fn lower_order_bound(&self) -> Option<usize> {
        match self.ord {
            Order::Zero => None,
            Order::At(k) => Some(k),
            Order::Lost => Some(self.prec + 1),
        }
    }

    pub fn canonical_class(&self) -> Result<CanonicalClass> {
        match self.ord {
            Order::Zero => Ok(CanonicalClass::Zero),
            Order::Lost => Err(self.lost()),
            Order::At(0) => {
                let m = self.z0.abs();
                if m.is_one() {
                    Ok(CanonicalClass::Unit)
                } else {
                    Ok(CanonicalClass::IntClass(m))
                }
            }
            Order::At(k) => Ok(CanonicalClass::JClass(
                self.leading().expect("order is known").abs(),
                k,
            )),
        }
    }

    fn lost(&self) -> Error {
        Error::PrecisionExhausted(format!(
            "all coefficients through x^{} cancel; the order is not determined",
            self.prec
        ))
    }

    /// Multiplicative inverse of a unit (constant term `±1`).
    pub fn unit_inverse(&self) -> Result<Self> {
        if !self.z0.abs().is_one() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        Self::integer(1, self.prec).series_quotient(self)
    }

    /// Coefficient-level quotient `self / divisor` in Q((x)) restricted to H.
    /// Exactness of the decision does not depend on precision: the order and
    /// the integrality of the quotient's constant term are determined exactly.
    fn series_quotient(&self, divisor: &Self) -> Result<Self> {
        let k = match divisor.ord {
            Order::Zero => return Err(Error::DivisionByZero),
            Order::Lost => return Err(divisor.lost()),
            Order::At(k) => k,
        };
        let work = min(self.prec, divisor.prec);
        let j = match self.ord {
            Order::Zero => return Ok(Self::integer(0, work)),
            Order::Lost => return Err(self.lost()),
            Order::At(j) => j,
        };
        let not_divisible = || Error::NotDivisible {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        if j < k {
            return Err(not_divisible());
        }
        let lead = divisor.coeff_or_zero(k);
        let q0 = self.coeff_or_zero(k) / &lead;
        if !is_integral(&q0) {
            return Err(not_divisible());
        }
        if self.exact && divisor.exact {
            let num = Poly::new(self.dense(self.span()));
            let den = Poly::new(divisor.dense(divisor.span()));
            let (q, r) = num.div_rem(&den)?;
            if r.coeffs().is_empty() {
                return Ok(Self::from_dense_parts(q.coeffs().to_vec(), work, true));
            }
        }
        let ord_q = j - k;
        let depth = match (self.known_through(), divisor.known_through()) {
            (None, None) => work,
            (Some(ka), None) => ka - k,
            (None, Some(kb)) => kb - k + ord_q,
            (Some(ka), Some(kb)) => min(ka - k, kb - k + ord_q),
        };
        let mut q: Vec<Rat> = Vec::with_capacity(depth + 1);
        let inv = lead.recip();
        for n in 0..=depth {
            let mut acc = self.coeff_or_zero(n + k);
            for i in 1..=n {
                let qi = &q[n - i];
                if qi.is_zero() {
                    continue;
                }
                let bi = divisor.coeff_or_zero(i + k);
                if !bi.is_zero() {
                    acc -= bi * qi;
                }
            }
            q.push(acc * &inv);
        }
        Ok(Self::from_dense_parts(q, depth, false))
    }

    /// Dense coefficients `0..=n`.
    fn dense(&self, n: usize) -> Vec<Rat> {
        (0..=n).map(|i| self.coeff_or_zero(i)).collect()
    }

    fn scale(&self, c: &Rat) -> Self {
        let z0 = Rat::from_integer(self.z0.clone()) * c;
        debug_assert!(is_integral(&z0));
        Self::build(
            z0.to_integer(),
            self.coeffs.iter().map(|a| a * c).collect(),
            self.prec,
            self.exact,
        )
    }

    /// Divisibility decided from the associate classes alone.
    pub fn h_divides(&self, other: &Self) -> Result<bool> {
        use CanonicalClass::*;
        Ok(match (self.canonical_class()?, other.canonical_class()?) {
            (Zero, b) => b == Zero,
            (Unit, _) | (_, Zero) => true,
            (IntClass(m), IntClass(n)) => num_traits::Zero::is_zero(&(n % m)),
            (IntClass(_), JClass(..)) => true,
            (IntClass(_), Unit) | (JClass(..), Unit) | (JClass(..), IntClass(_)) => false,
            (JClass(c, j), JClass(d, k)) => j < k || (j == k && is_integral(&(d / c))),
        })
    }

    /// Canonical representative of a class, at working precision `prec`.
    fn class_representative(class: &CanonicalClass, prec: usize) -> Self {
        match class {
            CanonicalClass::Zero => Self::integer(0, prec),
            CanonicalClass::Unit => Self::integer(1, prec),
            CanonicalClass::IntClass(m) => Self::integer(m.clone(), prec),
            CanonicalClass::JClass(c, k) => {
                Self::monomial(c.clone(), *k, prec).expect("k >= 1")
            }
        }
    }
}

/// Generator of the gcd of two classes together with integer-level Bezout
/// coefficients `(g, U, V)` with `U*A + V*B = g` for the class representatives.
fn class_gcd(a: &CanonicalClass, b: &CanonicalClass) -> (CanonicalClass, Int, Int) {
    use CanonicalClass::*;
    let one = Int::one;
    let zero = Int::zero;
    match (a, b) {
        (Zero, Zero) => (Zero, zero(), zero()),
        (Unit, _) => (Unit, one(), zero()),
        (_, Unit) => (Unit, zero(), one()),
        (x, Zero) => (x.clone(), one(), zero()),
        (Zero, y) => (y.clone(), zero(), one()),
        (IntClass(m), IntClass(n)) => {
            let (g, u, v) = int_gcd_ext(m, n);
            let class = if g.is_one() { Unit } else { IntClass(g) };
            (class, u, v)
        }
        (IntClass(m), JClass(..)) => (IntClass(m.clone()), one(), zero()),
        (JClass(..), IntClass(n)) => (IntClass(n.clone()), zero(), one()),
        (JClass(c, j), JClass(d, k)) => {
            if j < k {
                (a.clone(), one(), zero())
            } else if k < j {
                (b.clone(), zero(), one())
            } else {
                let (q, s, t) = rat_gcd_ext(c, d);
                (JClass(q, *j), s, t)
            }
        }
    }
}

impl PartialEq for HSeries {
    /// All representable coefficients agree.
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other)
    }
}

impl fmt::Display for HSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = std::iter::once((0usize, Rat::from_integer(self.z0.clone())))
            .chain(self.coeffs.iter().cloned().enumerate().map(|(i, c)| (i + 1, c)));
        crate::grammar::write_terms(f, terms)?;
        if !self.exact {
            write!(f, " @{}", self.prec)?;
        }
        Ok(())
    }
}

impl BezoutDomain for HSeries {
    const KIND: RingKind = RingKind::Henriksen;

    fn zero_like(&self) -> Self {
        Self::integer(0, self.prec)
    }

    fn one_like(&self) -> Self {
        Self::integer(1, self.prec)
    }

    fn from_int_like(&self, n: &Int) -> Self {
        Self::integer(n.clone(), self.prec)
    }

    fn plus(&self, rhs: &Self) -> Self {
        let work = min(self.prec, rhs.prec);
        let z0 = &self.z0 + &rhs.z0;
        if self.exact && rhs.exact {
            let n = self.coeffs.len().max(rhs.coeffs.len());
            let coeffs = (1..=n).map(|i| self.coeff_or_zero(i) + rhs.coeff_or_zero(i)).collect();
            return Self::exact(z0, coeffs, work);
        }
        let depth = match (self.known_through(), rhs.known_through()) {
            (Some(a), Some(b)) => min(a, b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        let coeffs = (1..=depth).map(|i| self.coeff_or_zero(i) + rhs.coeff_or_zero(i)).collect();
        Self::truncated(z0, coeffs, depth)
    }

    fn negate(&self) -> Self {
        HSeries {
            z0: -&self.z0,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            ..self.clone()
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        let work = min(self.prec, rhs.prec);
        let (Some(lb_a), Some(lb_b)) = (self.lower_order_bound(), rhs.lower_order_bound()) else {
            // one factor is exactly zero
            return Self::integer(0, work);
        };
        let (depth, exact) = match (self.known_through(), rhs.known_through()) {
            (None, None) => (self.coeffs.len() + rhs.coeffs.len(), true),
            (Some(ka), None) => (ka + lb_b, false),
            (None, Some(kb)) => (kb + lb_a, false),
            (Some(ka), Some(kb)) => (min(ka + lb_b, kb + lb_a), false),
        };
        let a = self.dense(min(depth, self.span()));
        let b = rhs.dense(min(depth, rhs.span()));
        let mut out = vec![Rat::zero(); depth + 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate().take(depth + 1 - i) {
                if !bj.is_zero() {
                    out[i + j] += ai * bj;
                }
            }
        }
        let prec = if exact { work } else { depth };
        Self::from_dense_parts(out, prec, exact)
    }

    fn is_zero(&self) -> bool {
        self.ord == Order::Zero
    }

    fn approx_eq(&self, other: &Self) -> bool {
        matches!(self.minus(other).ord, Order::Zero | Order::Lost)
    }

    fn is_unit(&self) -> bool {
        self.z0.abs().is_one()
    }

    fn unit_inverse(&self) -> Result<Self> {
        HSeries::unit_inverse(self)
    }

    fn split_unit(&self) -> Result<(Self, Self)> {
        match self.ord {
            Order::Zero => Ok((self.zero_like(), self.one_like())),
            Order::Lost => Err(self.lost()),
            Order::At(0) => {
                let m = self.z0.abs();
                let unit = self.scale(&Rat::from_integer(m.clone()).recip());
                Ok((Self::integer(m, self.prec), unit))
            }
            Order::At(k) => {
                let c = self.leading().expect("order is known").abs();
                let inv = c.recip();
                let shifted = self.coeffs[k - 1..].iter().map(|a| a * &inv).collect::<Vec<_>>();
                let mut it = shifted.into_iter();
                let z0 = it.next().expect("leading coefficient").to_integer();
                let rest: Vec<Rat> = it.collect();
                let unit = if self.exact {
                    Self::exact(z0, rest, self.prec)
                } else {
                    Self::truncated(z0, rest, self.prec - k)
                };
                Ok((Self::monomial(c, k, self.prec)?, unit))
            }
        }
    }

    fn gcd_ext(&self, other: &Self) -> Result<GcdCert<Self>> {
        let work = min(self.prec, other.prec);
        let (ca, cb) = (self.canonical_class()?, other.canonical_class()?);
        let (class, big_u, big_v) = class_gcd(&ca, &cb);
        let g = Self::class_representative(&class, work);
        let rep_a = Self::class_representative(&ca, work);
        let rep_b = Self::class_representative(&cb, work);
        let (_, alpha) = self.split_unit()?;
        let (_, beta) = other.split_unit()?;
        let coefficient = |big: Int, unit: &Self| -> Result<Self> {
            if Zero::is_zero(&big) {
                Ok(Self::integer(0, work))
            } else {
                Ok(Self::integer(big, work).times(&unit.unit_inverse()?))
            }
        };
        let u = coefficient(big_u, &alpha)?;
        let v = coefficient(big_v, &beta)?;
        let cofactor = |rep: &Self, unit: &Self| -> Result<Self> {
            if g.is_zero() {
                return Ok(Self::integer(0, work));
            }
            Ok(rep.series_quotient(&g)?.times(unit))
        };
        let a1 = cofactor(&rep_a, &alpha)?;
        let b1 = cofactor(&rep_b, &beta)?;
        Ok(GcdCert { g, u, v, a1, b1 })
    }

    fn div_exact(&self, divisor: &Self) -> Result<Self> {
        self.series_quotient(divisor)
    }

    fn known_precision(&self) -> Option<usize> {
        self.known_through()
    }

    fn shape(&self) -> Result<Shape> {
        Ok(match self.canonical_class()? {
            CanonicalClass::Zero => Shape::Zero,
            CanonicalClass::Unit => Shape::Unit,
            CanonicalClass::IntClass(m) => Shape::Integer(m),
            CanonicalClass::JClass(coefficient, order) => Shape::Radical { coefficient, order },
        })
    }
}
