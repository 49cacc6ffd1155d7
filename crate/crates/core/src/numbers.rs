//! Arbitrary-precision integers and canonical rationals.
//!
//! `Int` is `num_bigint::BigInt`; `Rat` is `num_rational::BigRational`, whose
//! constructor already reduces to lowest terms with a positive denominator and
//! represents zero as `0/1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Extended Euclid. Returns `(g, u, v)` with `u*a + v*b = g`, `g >= 0`.
///
/// `(0, 0)` maps to `(0, 0, 0)`.
pub fn int_gcd_ext(a: &Int, b: &Int) -> (Int, Int, Int) {
    if a.is_zero() && b.is_zero() {
        return (Int::zero(), Int::zero(), Int::zero());
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (Int::one(), Int::zero());
    let (mut old_t, mut t) = (Int::zero(), Int::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn int_gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// `num/den` in lowest terms with a positive denominator.
pub fn rat_canonical(num: Int, den: Int) -> Result<Rat> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rat::new(num, den))
}

pub fn rat_from_int(n: Int) -> Rat {
    Rat::from_integer(n)
}

pub fn is_integral(q: &Rat) -> bool {
    q.denom().is_one()
}

/// Generator `q >= 0` of the additive group `c*Z + d*Z` together with integers
/// `s, t` such that `s*c + t*d = q`.
///
/// The generator is `gcd(num(c)*den(d), num(d)*den(c)) / (den(c)*den(d))`.
pub fn rat_gcd_ext(c: &Rat, d: &Rat) -> (Rat, Int, Int) {
    let lhs = c.numer() * d.denom();
    let rhs = d.numer() * c.denom();
    let (g, s, t) = int_gcd_ext(&lhs, &rhs);
    let q = Rat::new(g, c.denom() * d.denom());
    (q, s, t)
}

/// Parse `"p"` or `"p/q"` (optional sign, surrounding whitespace ignored).
pub fn parse_rat(text: &str) -> Result<Rat> {
    let trimmed = text.trim();
    match trimmed.split_once('/') {
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            rat_canonical(num, den)
        }
        None => Ok(rat_from_int(parse_int(trimmed)?)),
    }
}

pub fn parse_int(text: &str) -> Result<Int> {
    let trimmed = text.trim();
    trimmed
        .parse::<Int>()
        .map_err(|_| Error::parse(0, format!("invalid integer `{trimmed}`")))
}

/// Number of bits of `|n|`; an upper bound on the number of prime factors.
pub fn bit_length(n: &Int) -> usize {
    n.abs().bits() as usize
}
