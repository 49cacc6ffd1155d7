//! The Bezout-domain contract and the algorithms that only need that contract.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::{Int, Rat};

/// Which of the three concrete domains an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum RingKind {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Qx")]
    RationalPolynomials,
    #[serde(rename = "H")]
    Henriksen,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Integers => "Z",
            RingKind::RationalPolynomials => "Qx",
            RingKind::Henriksen => "H",
        }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Coarse description of an associate class.
///
/// `Integer(m)` covers nonunits of Z and the constant-term classes of H,
/// `Radical` the classes `c*x^k` of H (elements of the Jacobson radical),
/// `Polynomial` the nonunits of Q[x].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Zero,
    Unit,
    Integer(Int),
    Radical { coefficient: Rat, order: usize },
    Polynomial { degree: usize },
}

impl Shape {
    /// Lexicographic size that strictly drops when a nonunit factor is removed
    /// from an element of Z, Q[x] or an integer class of H. A radical class of
    /// H can lose an integer factor without moving it, which is how loops detect
    /// stagnation.
    pub fn descent_measure(&self) -> (usize, Int) {
        match self {
            Shape::Zero => (usize::MAX, Int::from(0)),
            Shape::Unit => (0, Int::from(1)),
            Shape::Integer(m) => (0, m.clone()),
            Shape::Radical { order, .. } => (*order, Int::from(0)),
            Shape::Polynomial { degree } => (*degree, Int::from(0)),
        }
    }
}

/// Extended-gcd certificate for a pair `(a, b)`.
#[derive(Debug, Clone)]
pub struct GcdCert<R> {
    pub g: R,
    pub u: R,
    pub v: R,
    pub a1: R,
    pub b1: R,
}

impl<R: BezoutDomain> GcdCert<R> {
    /// Checks the certificate identities against the inputs by ring arithmetic.
    /// The cofactor identity `u*a1 + v*b1 = 1` is only required when `g != 0`.
    pub fn check(&self, a: &R, b: &R) -> Vec<(&'static str, bool)> {
        let mut out = vec![
            ("u*a + v*b = g", self.u.times(a).plus(&self.v.times(b)).approx_eq(&self.g)),
            ("a = g*a1", self.g.times(&self.a1).approx_eq(a)),
            ("b = g*b1", self.g.times(&self.b1).approx_eq(b)),
        ];
        if self.g.is_zero() {
            out.push(("g = 0 only if a = b = 0", a.is_zero() && b.is_zero()));
        } else {
            out.push((
                "u*a1 + v*b1 = 1",
                self.u
                    .times(&self.a1)
                    .plus(&self.v.times(&self.b1))
                    .approx_eq(&a.one_like()),
            ));
        }
        out.push((
            "g canonical",
            match self.g.split_unit() {
                Ok((canon, _)) => canon.approx_eq(&self.g),
                Err(_) => false,
            },
        ));
        out
    }

    pub fn holds(&self, a: &R, b: &R) -> bool {
        self.check(a, b).iter().all(|(_, ok)| *ok)
    }
}

/// The operations every generic algorithm in this crate relies on.
///
/// Elements carry whatever context their ring needs (the Henriksen ring keeps
/// its working precision on each element), so constants are produced "like"
/// an existing element.
pub trait BezoutDomain: Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {
    const KIND: RingKind;

    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: &Int) -> Self;

    fn plus(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negate())
    }

    /// True only for an element known to be exactly zero.
    fn is_zero(&self) -> bool;
    /// Equality of all representable data (coefficient-wise to precision for
    /// truncated series, exact otherwise).
    fn approx_eq(&self, other: &Self) -> bool;
    fn is_unit(&self) -> bool;
    fn unit_inverse(&self) -> Result<Self>;

    /// `(canonical, unit)` with `self = canonical * unit`. Zero maps to `(0, 1)`.
    fn split_unit(&self) -> Result<(Self, Self)>;
    fn gcd_ext(&self, other: &Self) -> Result<GcdCert<Self>>;
    /// The unique `q` with `q * divisor = self`.
    fn div_exact(&self, divisor: &Self) -> Result<Self>;
    fn shape(&self) -> Result<Shape>;

    /// Degree through which a truncated element is known; `None` when exact.
    fn known_precision(&self) -> Option<usize> {
        None
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.from_int_like(&Int::from(n))
    }
}

pub fn canonical<R: BezoutDomain>(a: &R) -> Result<R> {
    Ok(a.split_unit()?.0)
}

pub fn associates<R: BezoutDomain>(a: &R, b: &R) -> Result<bool> {
    Ok(canonical(a)?.approx_eq(&canonical(b)?))
}

/// `a | b`, decided by attempting exact division.
pub fn divides<R: BezoutDomain>(a: &R, b: &R) -> Result<bool> {
    if a.is_zero() {
        return Ok(b.is_zero());
    }
    match b.div_exact(a) {
        Ok(_) => Ok(true),
        Err(Error::NotDivisible { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn is_comaximal<R: BezoutDomain>(a: &R, b: &R) -> Result<bool> {
    Ok(a.gcd_ext(b)?.g.is_unit())
}

/// Canonical associate of `a*b / gcd(a, b)`; `lcm(a, 0) = 0`.
pub fn lcm<R: BezoutDomain>(a: &R, b: &R) -> Result<R> {
    if a.is_zero() || b.is_zero() {
        return Ok(a.zero_like());
    }
    let cert = a.gcd_ext(b)?;
    canonical(&cert.a1.times(b))
}

pub fn pow<R: BezoutDomain>(a: &R, exp: usize) -> R {
    let mut acc = a.one_like();
    for _ in 0..exp {
        acc = acc.times(a);
    }
    acc
}

/// Gcd of a list, canonical; zero for an empty or all-zero list.
pub fn gcd_all<R: BezoutDomain>(like: &R, elems: &[R]) -> Result<R> {
    let mut acc = like.zero_like();
    for e in elems {
        acc = acc.gcd_ext(e)?.g;
    }
    Ok(acc)
}

/// Largest factor `r` of `a` that is comaximal to `b`, obtained by repeatedly
/// dividing out `gcd(r, b)`. Returns `None` when a nonunit extraction leaves
/// the descent measure of `r` unchanged.
pub fn coprime_part<R: BezoutDomain>(a: &R, b: &R) -> Result<Option<R>> {
    let mut r = a.clone();
    loop {
        let d = r.gcd_ext(b)?.g;
        if d.is_unit() {
            return Ok(Some(r));
        }
        if d.is_zero() {
            // r = b = 0
            return Ok(None);
        }
        let next = r.div_exact(&d)?;
        if next.shape()?.descent_measure() >= r.shape()?.descent_measure() {
            return Ok(None);
        }
        r = next;
    }
}

/// Pairwise-comaximal refinement of a list of nonzero elements.
///
/// Repeatedly replaces a pair sharing a nonunit gcd `g` by `g, a/g, b/g`.
/// The output is canonical, free of units and sorted by descent measure.
pub fn coprime_basis<R: BezoutDomain>(elems: &[R]) -> Result<Vec<R>> {
    let mut basis: Vec<R> = Vec::new();
    for e in elems {
        if e.is_zero() {
            return Err(Error::NotANonzeroNonunit(e.to_string()));
        }
        push_nonunit(&mut basis, e)?;
    }
    let mut guard = 0usize;
    'outer: loop {
        guard += 1;
        if guard > 10_000 {
            return Err(Error::SearchExhausted("coprime basis refinement".into()));
        }
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let cert = basis[i].gcd_ext(&basis[j])?;
                if cert.g.is_unit() {
                    continue;
                }
                let before = total_measure(&[&basis[i], &basis[j]])?;
                let (a, b) = (basis[i].clone(), basis[j].clone());
                let mut replacement = Vec::new();
                push_nonunit(&mut replacement, &cert.g)?;
                push_nonunit(&mut replacement, &cert.a1)?;
                push_nonunit(&mut replacement, &cert.b1)?;
                let after = total_measure(&replacement.iter().collect::<Vec<_>>())?;
                if after >= before {
                    return Err(Error::CoprimeBasisUnavailable {
                        a: a.to_string(),
                        b: b.to_string(),
                    });
                }
                basis.remove(j);
                basis.remove(i);
                for r in replacement {
                    push_nonunit(&mut basis, &r)?;
                }
                continue 'outer;
            }
        }
        break;
    }
    let mut keyed = basis
        .into_iter()
        .map(|b| Ok((b.shape()?.descent_measure(), b.to_string(), b)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|x, y| (&x.0, &x.1).cmp(&(&y.0, &y.1)));
    Ok(keyed.into_iter().map(|(_, _, b)| b).collect())
}

fn push_nonunit<R: BezoutDomain>(basis: &mut Vec<R>, e: &R) -> Result<()> {
    if e.is_unit() {
        return Ok(());
    }
    let canon = canonical(e)?;
    for existing in basis.iter() {
        if existing.approx_eq(&canon) {
            return Ok(());
        }
    }
    basis.push(canon);
    Ok(())
}

// Sum of orders, then product of integer parts.
fn total_measure<R: BezoutDomain>(elems: &[&R]) -> Result<(usize, Int)> {
    let mut order = 0usize;
    let mut size = Int::from(1);
    for e in elems {
        let (o, m) = e.shape()?.descent_measure();
        order += o;
        if o == 0 {
            size *= m;
        }
    }
    Ok((order, size))
}

/// Exponents `e_i` and a unit `w` with `a = w * prod basis[i]^e_i`, found by
/// repeated exact division. Fails with `NotDivisible` if `a` is not supported
/// on the basis.
pub fn basis_exponents<R: BezoutDomain>(a: &R, basis: &[R]) -> Result<(Vec<usize>, R)> {
    let mut rest = a.clone();
    let mut exps = Vec::with_capacity(basis.len());
    for p in basis {
        let mut e = 0;
        loop {
            match rest.div_exact(p) {
                Ok(q) => {
                    rest = q;
                    e += 1;
                    if e > 4096 {
                        return Err(Error::SearchExhausted("basis exponent".into()));
                    }
                }
                Err(Error::NotDivisible { .. }) => break,
                Err(err) => return Err(err),
            }
        }
        exps.push(e);
    }
    if !rest.is_unit() {
        return Err(Error::NotDivisible {
            dividend: a.to_string(),
            divisor: "coprime basis".into(),
        });
    }
    Ok((exps, rest))
}
