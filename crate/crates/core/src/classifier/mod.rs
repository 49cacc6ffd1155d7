//! Element classes: pseudo-irreducibility, comaximal factorization, neat and
//! adequate decompositions, stable-range reductions and quotient structure.

mod decompose;
mod quotient;
mod stable;

pub use decompose::{
    adequate_decompose, is_adequate, is_neat, neat_decompose, AdequacyVerdict,
    AdequateDecomposition, NeatDecomposition, NeatVerdict,
};
pub use quotient::{
    find_special_elements, is_almost_sr1, quotient_descriptor, quotient_descriptor_with_seed,
    residue_ring_has_sr1, AlmostSr1Method, AlmostSr1Verdict, QuotientComponent,
    QuotientDescriptor, QuotientKind, SpecialKind,
};
pub use stable::{neat_range_reduce, sr1_reduce, sr2_reduce, NeatRangeCert, Sr2Cert};

use num_integer::Integer;
use num_traits::{Pow, ToPrimitive};

use crate::error::{Error, Result};
use crate::factor::{trial_factor, DEFAULT_TRIAL_BOUND};
use crate::instances::{require_nonzero_nonunit, Instance};
use crate::numbers::Int;
use crate::ring::{divides, gcd_all, is_comaximal, BezoutDomain, RingKind, Shape};

/// Identity name paired with its pass/fail outcome.
pub type Report = Vec<(&'static str, bool)>;

/// Moduli up to this size have their residue idempotents enumerated.
pub const IDEMPOTENT_ENUMERATION_LIMIT: u64 = 4096;

/// Why `R/aR` has no nontrivial idempotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectedness {
    /// `a` is associate to `p^e`. `enumerated` is set when every residue
    /// modulo `p^e` was tested and only 0 and 1 are idempotent.
    PrimePower { prime: Int, exponent: u32, enumerated: bool },
    /// `a` lies in the Jacobson radical of H, a local-like situation in which
    /// `R/aR` keeps a single minimal prime.
    Radical,
}

/// `a = b*c` with `b`, `c` comaximal nonunits and the idempotent `e` they
/// induce modulo `a`.
#[derive(Debug, Clone)]
pub struct Split<R> {
    pub b: R,
    pub c: R,
    pub idempotent: R,
}

#[derive(Debug, Clone)]
pub struct PseudoIrrVerdict<R> {
    pub pseudo_irreducible: bool,
    pub connected: Option<Connectedness>,
    pub split: Option<Split<R>>,
}

/// `a = unit * prod(factors)` with pairwise comaximal pseudo-irreducible
/// factors.
#[derive(Debug, Clone)]
pub struct ComaxFactorization<R> {
    pub unit: R,
    pub factors: Vec<R>,
}

fn unsupported(ring: RingKind, op: &'static str) -> Error {
    Error::UnsupportedRing {
        ring: ring.name(),
        op,
    }
}

/// `m` when `a` is associate to the integer `m >= 2`.
pub(crate) fn integer_modulus<R: BezoutDomain>(a: &R) -> Result<Option<Int>> {
    Ok(match a.shape()? {
        Shape::Integer(m) => Some(m),
        _ => None,
    })
}

/// True when `e` is idempotent modulo `a` and neither 0 nor 1 there.
pub fn is_nontrivial_idempotent<R: BezoutDomain>(a: &R, e: &R) -> Result<bool> {
    let one = a.one_like();
    Ok(divides(a, &e.times(e).minus(e))?
        && !divides(a, e)?
        && !divides(a, &e.minus(&one))?)
}

/// The comaximal split induced by a nontrivial idempotent `e` modulo `a`:
/// `b = gcd(a, e)`, `c = a / b`.
pub fn split_from_idempotent<R: BezoutDomain>(a: &R, e: &R) -> Result<Split<R>> {
    if !is_nontrivial_idempotent(a, e)? {
        return Err(Error::NotDivisible {
            dividend: format!("{e}^2 - {e}"),
            divisor: a.to_string(),
        });
    }
    let b = a.gcd_ext(e)?.g;
    let c = a.div_exact(&b)?;
    Ok(Split {
        b,
        c,
        idempotent: e.clone(),
    })
}

/// Residue of `e` modulo the integer class `m`, as a least nonnegative integer.
fn reduce_mod<R: Instance>(e: &R, m: &Int) -> R {
    let level = e.constant_level().expect("integer classes live in Z or H");
    e.from_int_like(&level.mod_floor(m))
}

fn split_integer_class<R: Instance>(a: &R, factors: &[(Int, u32)], m: &Int) -> Result<Split<R>> {
    let (p, e) = &factors[0];
    let b = a.from_int_like(&Pow::pow(p, *e));
    let c = a.div_exact(&b)?;
    let cert = b.gcd_ext(&c)?;
    debug_assert!(cert.g.is_unit());
    // u*b + v*c = 1, so c*v is 1 modulo b and 0 modulo c
    let idempotent = reduce_mod(&c.times(&cert.v), m);
    Ok(Split { b, c, idempotent })
}

/// Decides whether `a` admits no factorization into two comaximal nonunits,
/// i.e. whether `R/aR` is connected. A negative verdict carries a verified
/// split and its idempotent.
pub fn is_pseudo_irreducible<R: Instance>(a: &R) -> Result<PseudoIrrVerdict<R>> {
    require_nonzero_nonunit(a)?;
    if R::KIND == RingKind::RationalPolynomials {
        return Err(unsupported(R::KIND, "is_pseudo_irreducible"));
    }
    match a.shape()? {
        Shape::Radical { .. } => Ok(PseudoIrrVerdict {
            pseudo_irreducible: true,
            connected: Some(Connectedness::Radical),
            split: None,
        }),
        Shape::Integer(m) => {
            let factors = trial_factor(&m, DEFAULT_TRIAL_BOUND)?;
            if let [(p, e)] = factors.as_slice() {
                let enumerated = m.to_u64().is_some_and(|n| n <= IDEMPOTENT_ENUMERATION_LIMIT)
                    && residue_idempotents(m.to_u64().expect("small")).len() == 2;
                return Ok(PseudoIrrVerdict {
                    pseudo_irreducible: true,
                    connected: Some(Connectedness::PrimePower {
                        prime: p.clone(),
                        exponent: *e,
                        enumerated,
                    }),
                    split: None,
                });
            }
            Ok(PseudoIrrVerdict {
                pseudo_irreducible: false,
                connected: None,
                split: Some(split_integer_class(a, &factors, &m)?),
            })
        }
        _ => Err(Error::NotANonzeroNonunit(a.to_string())),
    }
}

/// All idempotents of `Z/nZ`, ascending.
pub fn residue_idempotents(n: u64) -> Vec<u64> {
    (0..n)
        .filter(|&e| (e as u128 * e as u128) % n as u128 == e as u128)
        .collect()
}

/// A nontrivial idempotent modulo `a`, built by the Chinese remainder theorem
/// on the integer class of `a`; `None` when `R/aR` is connected.
pub fn idempotent_mod<R: Instance>(a: &R) -> Result<Option<R>> {
    if R::KIND == RingKind::RationalPolynomials {
        require_nonzero_nonunit(a)?;
        return Err(unsupported(R::KIND, "idempotent_mod"));
    }
    Ok(is_pseudo_irreducible(a)?.split.map(|s| s.idempotent))
}

/// Complete comaximal factorization over Z and H: prime-power factors of the
/// integer class, or the element itself for a radical class.
pub fn comax_factor<R: Instance>(a: &R) -> Result<ComaxFactorization<R>> {
    require_nonzero_nonunit(a)?;
    if R::KIND == RingKind::RationalPolynomials {
        return Err(unsupported(R::KIND, "comax_factor"));
    }
    match a.shape()? {
        Shape::Radical { .. } => Ok(ComaxFactorization {
            unit: a.one_like(),
            factors: vec![a.clone()],
        }),
        Shape::Integer(m) => {
            let factors: Vec<R> = trial_factor(&m, DEFAULT_TRIAL_BOUND)?
                .iter()
                .map(|(p, e)| a.from_int_like(&Pow::pow(p, *e)))
                .collect();
            let unit = a.div_exact(&a.from_int_like(&m))?;
            Ok(ComaxFactorization { unit, factors })
        }
        _ => Err(Error::NotANonzeroNonunit(a.to_string())),
    }
}

impl<R: Instance> PseudoIrrVerdict<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut out = Vec::new();
        out.push((
            "verdict matches evidence",
            self.pseudo_irreducible == self.split.is_none()
                && self.pseudo_irreducible == self.connected.is_some(),
        ));
        if let Some(Connectedness::PrimePower { prime, exponent, enumerated }) = &self.connected {
            let q = a.from_int_like(&Pow::pow(prime, *exponent));
            out.push(("a associate to p^e", crate::ring::associates(a, &q)?));
            if *enumerated {
                let n = Pow::pow(prime, *exponent).to_u64().unwrap_or(0);
                out.push(("only 0 and 1 idempotent mod a", residue_idempotents(n) == [0, 1]));
            }
        }
        if let Some(Connectedness::Radical) = &self.connected {
            out.push((
                "a in the radical",
                matches!(a.shape()?, Shape::Radical { .. }),
            ));
        }
        if let Some(s) = &self.split {
            out.extend(s.check(a)?);
        }
        Ok(out)
    }
}

impl<R: BezoutDomain> Split<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        Ok(vec![
            ("a = b*c", self.b.times(&self.c).approx_eq(a)),
            ("b, c nonunits", !self.b.is_unit() && !self.c.is_unit()),
            ("bR + cR = R", is_comaximal(&self.b, &self.c)?),
            ("e nontrivial idempotent mod a", is_nontrivial_idempotent(a, &self.idempotent)?),
        ])
    }
}

impl<R: Instance> ComaxFactorization<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut product = self.unit.clone();
        for f in &self.factors {
            product = product.times(f);
        }
        let mut pairwise = true;
        for (i, f) in self.factors.iter().enumerate() {
            for g in &self.factors[i + 1..] {
                pairwise &= is_comaximal(f, g)?;
            }
        }
        let mut irreducible = true;
        for f in &self.factors {
            irreducible &= !f.is_unit() && is_pseudo_irreducible(f)?.pseudo_irreducible;
        }
        Ok(vec![
            ("unit is a unit", self.unit.is_unit()),
            ("unit * product = a", product.approx_eq(a)),
            ("factors pairwise comaximal", pairwise),
            ("factors pseudo-irreducible nonunits", irreducible),
        ])
    }
}

/// Canonical gcd of three elements; used for unimodularity preconditions.
pub(crate) fn unimodular<R: BezoutDomain>(elems: &[R]) -> Result<bool> {
    Ok(gcd_all(&elems[0], elems)?.is_unit())
}

pub(crate) fn all_pass(report: &Report) -> bool {
    report.iter().all(|(_, ok)| *ok)
}
