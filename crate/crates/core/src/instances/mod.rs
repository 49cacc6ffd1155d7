//! The concrete Bezout domains: Z, Q[x] and the Henriksen ring.

pub mod henriksen;
mod integers;
pub mod poly;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::grammar::ElementGrammar;
use crate::numbers::{Int, Rat};
use crate::ring::BezoutDomain;
use crate::sample::Sample;

pub use henriksen::{CanonicalClass, HSeries, Order, DEFAULT_PRECISION};
pub use poly::Poly;

/// Ring-specific facts the classifier needs beyond the Bezout contract.
pub trait Instance: BezoutDomain + ElementGrammar + Sample {
    /// Zero of the ring at the given working precision.
    fn zero_at(precision: usize) -> Self;

    /// Image under the constant-term map to Z (identity on Z). `None` for Q[x].
    fn constant_level(&self) -> Option<Int>;

    /// Decides whether `a + b*t` is a unit for some `t` and returns one.
    fn sr1_decide(a: &Self, b: &Self) -> Result<Option<Self>>;

    /// The first `count` nonunits in this ring's documented enumeration order.
    fn enumerate_nonunits(like: &Self, count: usize) -> Vec<Self>;

    /// The element as a rational polynomial, for Q[x] only.
    fn as_poly(&self) -> Option<&Poly> {
        None
    }
}

/// `t` with `a + b*t = ±1` in Z, if any.
pub(crate) fn int_sr1(a: &Int, b: &Int) -> Option<Int> {
    if Zero::is_zero(b) {
        return if a.abs().is_one() { Some(Int::zero()) } else { None };
    }
    for target in [Int::one(), -Int::one()] {
        let (t, r) = (target - a).div_rem(b);
        if Zero::is_zero(&r) {
            return Some(t);
        }
    }
    None
}

impl Instance for Int {
    fn zero_at(_precision: usize) -> Self {
        Int::zero()
    }

    fn constant_level(&self) -> Option<Int> {
        Some(self.clone())
    }

    fn sr1_decide(a: &Self, b: &Self) -> Result<Option<Self>> {
        Ok(int_sr1(a, b))
    }

    /// 2, 3, 4, ...
    fn enumerate_nonunits(_like: &Self, count: usize) -> Vec<Self> {
        (2..).take(count).map(Int::from).collect()
    }
}

impl Instance for HSeries {
    fn zero_at(precision: usize) -> Self {
        HSeries::integer(0, precision)
    }

    fn constant_level(&self) -> Option<Int> {
        Some(self.constant_term().clone())
    }

    /// A unit of H is a series with constant term ±1, so only the constant
    /// terms matter: with `b` in the radical the constant term of `a + bt` is
    /// fixed, otherwise the integer congruence decides.
    fn sr1_decide(a: &Self, b: &Self) -> Result<Option<Self>> {
        Ok(int_sr1(a.constant_term(), b.constant_term())
            .map(|t| HSeries::integer(t, a.precision().min(b.precision()))))
    }

    /// 2, x, 3, x^2, 4, x^3, ...
    fn enumerate_nonunits(like: &Self, count: usize) -> Vec<Self> {
        let p = like.precision();
        (0..count)
            .map(|i| {
                let n = i / 2;
                if i % 2 == 0 {
                    HSeries::integer(n as i64 + 2, p)
                } else {
                    HSeries::monomial(Rat::one(), n + 1, p).expect("order >= 1")
                }
            })
            .collect()
    }
}

impl Instance for Poly {
    fn as_poly(&self) -> Option<&Poly> {
        Some(self)
    }

    fn zero_at(_precision: usize) -> Self {
        Poly::zero()
    }

    fn constant_level(&self) -> Option<Int> {
        None
    }

    /// `a + b*t` is a nonzero constant iff `b` is a unit or the remainder of
    /// `a` modulo `b` is a nonzero constant (any other `t` raises the degree
    /// to at least `deg b`).
    fn sr1_decide(a: &Self, b: &Self) -> Result<Option<Self>> {
        if BezoutDomain::is_zero(b) {
            return Ok(if a.is_unit() { Some(Poly::zero()) } else { None });
        }
        if b.is_unit() {
            let one = a.one_like();
            return Ok(Some(one.minus(a).div_exact(b)?));
        }
        let (q, r) = a.div_rem(b)?;
        Ok(if r.is_unit() { Some(q.negate()) } else { None })
    }

    /// x, x + 1, x - 1, x^2, x + 2, x - 2, x^2 + 1, ...: monic linear
    /// polynomials interleaved with `x^2 + c` every third slot.
    fn enumerate_nonunits(_like: &Self, count: usize) -> Vec<Self> {
        let shifts = |n: usize| -> i64 {
            let k = (n as i64 + 1) / 2;
            if n % 2 == 1 { k } else { -k }
        };
        let (mut lin, mut quad) = (0usize, 0usize);
        (0..count)
            .map(|i| {
                if i % 3 == 2 {
                    let c = shifts(quad);
                    quad += 1;
                    Poly::from_ints(&[c, 0, 1])
                } else {
                    let c = shifts(lin);
                    lin += 1;
                    Poly::from_ints(&[c, 1])
                }
            })
            .collect()
    }
}

/// Rejects zero and units.
pub(crate) fn require_nonzero_nonunit<R: BezoutDomain>(a: &R) -> Result<()> {
    if a.is_zero() || a.is_unit() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    Ok(())
}
