use num_integer::Integer;
use num_traits::{Pow, ToPrimitive};

use crate::classifier::{
    integer_modulus, is_adequate, is_neat, is_nontrivial_idempotent, Report,
};
use crate::error::{Error, Result};
use crate::factor::{trial_factor, DEFAULT_TRIAL_BOUND};
use crate::instances::{Instance, Poly};
use crate::numbers::Int;
use crate::ring::{associates, divides, is_comaximal, BezoutDomain, RingKind, Shape};
use crate::sample::rng;

/// Number of radical elements sampled when asserting `aH ⊇ xQ[[x]]`.
pub const INCLUSION_SAMPLES: usize = 16;

/// Residue rings up to this size are checked for stable range 1 by enumeration.
pub const SR1_ENUMERATION_LIMIT: u64 = 128;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientKind {
    TrivialRing,
    Local,
    SemilocalSum,
    ConnectedNonLocal,
}

impl QuotientKind {
    pub fn name(self) -> &'static str {
        match self {
            QuotientKind::TrivialRing => "TrivialRing",
            QuotientKind::Local => "Local",
            QuotientKind::SemilocalSum => "SemilocalSum",
            QuotientKind::ConnectedNonLocal => "ConnectedNonLocal",
        }
    }
}

/// One summand `R/qR` of the quotient.
#[derive(Debug, Clone)]
pub struct QuotientComponent<R> {
    pub modulus: R,
    pub label: String,
    pub valuation_ring: bool,
    /// Lift of the CRT idempotent selecting this summand (semilocal sums only).
    pub idempotent: Option<R>,
}

#[derive(Debug, Clone)]
pub struct QuotientDescriptor<R> {
    pub kind: QuotientKind,
    pub components: Vec<QuotientComponent<R>>,
    pub minimal_primes: usize,
    /// Two comaximal nonunits modulo `a` (connected non-local quotients).
    pub witness: Option<(R, R)>,
    /// Sampled radical elements confirmed to lie in `aR`.
    pub inclusion_samples: usize,
}

/// Structure of `R/aR` with the default sampling seed.
pub fn quotient_descriptor<R: Instance>(a: &R) -> Result<QuotientDescriptor<R>> {
    quotient_descriptor_with_seed(a, 0)
}

/// Structure of `R/aR`.
///
/// For an integer class `m` (over Z, or over H where every radical element is
/// divisible by `m`, which is asserted on seeded samples first) the quotient is
/// `Z/m`: local when `m` is a prime power, otherwise the sum of its
/// prime-power parts, split by CRT idempotents. A radical class of H gives a
/// connected quotient with the two comaximal nonunits 2 and 3. Over Q[x] only
/// powers of a linear polynomial are recognized.
pub fn quotient_descriptor_with_seed<R: Instance>(a: &R, seed: u64) -> Result<QuotientDescriptor<R>> {
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    let mut out = QuotientDescriptor {
        kind: QuotientKind::TrivialRing,
        components: Vec::new(),
        minimal_primes: 0,
        witness: None,
        inclusion_samples: 0,
    };
    match a.shape()? {
        Shape::Unit => {}
        Shape::Zero => unreachable!("checked above"),
        Shape::Radical { .. } => {
            out.kind = QuotientKind::ConnectedNonLocal;
            out.minimal_primes = 1;
            out.witness = Some((a.from_i64_like(2), a.from_i64_like(3)));
        }
        Shape::Polynomial { .. } => {
            let radical = squarefree_part(a)?;
            if radical.degree() != Some(1) {
                return Err(Error::UnsupportedRing {
                    ring: R::KIND.name(),
                    op: "quotient_descriptor beyond powers of a linear polynomial",
                });
            }
            out.kind = QuotientKind::Local;
            out.minimal_primes = 1;
            let modulus = crate::ring::canonical(a)?;
            out.components.push(QuotientComponent {
                label: format!("Q[x]/({modulus})"),
                modulus,
                valuation_ring: true,
                idempotent: None,
            });
        }
        Shape::Integer(m) => {
            if R::KIND == RingKind::Henriksen {
                let mut r = rng(seed);
                for _ in 0..INCLUSION_SAMPLES {
                    let y = R::sample_radical(a, &mut r).expect("H has radical elements");
                    if !divides(a, &y)? {
                        return Err(Error::NotDivisible {
                            dividend: y.to_string(),
                            divisor: a.to_string(),
                        });
                    }
                }
                out.inclusion_samples = INCLUSION_SAMPLES;
            }
            let factors = trial_factor(&m, DEFAULT_TRIAL_BOUND)?;
            out.minimal_primes = factors.len();
            let parts: Vec<Int> = factors.iter().map(|(p, e)| Pow::pow(p, *e)).collect();
            out.kind = if parts.len() == 1 {
                QuotientKind::Local
            } else {
                QuotientKind::SemilocalSum
            };
            for q in &parts {
                let idempotent = (parts.len() > 1).then(|| a.from_int_like(&crt_idempotent(q, &m)));
                out.components.push(QuotientComponent {
                    modulus: a.from_int_like(q),
                    label: format!("Z/{q}"),
                    valuation_ring: true,
                    idempotent,
                });
            }
        }
    }
    Ok(out)
}

/// The residue `e` modulo `m` with `e = 1 (mod q)` and `e = 0 (mod m/q)`.
fn crt_idempotent(q: &Int, m: &Int) -> Int {
    let rest = m / q;
    let ext = q.extended_gcd(&rest);
    // ext.x*q + ext.y*rest = 1
    (ext.y * &rest).mod_floor(m)
}

fn squarefree_part<R: Instance>(a: &R) -> Result<Poly> {
    let p = a.as_poly().expect("polynomial shapes come from Q[x]");
    let g = p.gcd_ext(&p.derivative())?.g;
    p.div_exact(&g)
}

impl<R: Instance> QuotientDescriptor<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut out = Vec::new();
        match self.kind {
            QuotientKind::TrivialRing => out.push(("a is a unit", a.is_unit())),
            QuotientKind::Local => {
                out.push(("one component", self.components.len() == 1));
                if let Some(c) = self.components.first() {
                    out.push(("component modulus associate to a", associates(&c.modulus, a)?));
                }
            }
            QuotientKind::SemilocalSum => {
                let mut product = a.one_like();
                let mut pairwise = true;
                let mut idempotents = true;
                let mut sum = a.zero_like();
                for (i, c) in self.components.iter().enumerate() {
                    product = product.times(&c.modulus);
                    for d in &self.components[i + 1..] {
                        pairwise &= is_comaximal(&c.modulus, &d.modulus)?;
                        if let (Some(e), Some(f)) = (&c.idempotent, &d.idempotent) {
                            idempotents &= divides(a, &e.times(f))?;
                        }
                    }
                    match &c.idempotent {
                        Some(e) => {
                            idempotents &= is_nontrivial_idempotent(a, e)?;
                            idempotents &= divides(&c.modulus, &e.minus(&a.one_like()))?;
                            sum = sum.plus(e);
                        }
                        None => idempotents = false,
                    }
                }
                out.push(("at least two components", self.components.len() >= 2));
                out.push(("moduli pairwise comaximal", pairwise));
                out.push(("product of moduli associate to a", associates(&product, a)?));
                out.push(("orthogonal idempotents lifting each summand", idempotents));
                out.push(("idempotents sum to 1 mod a", divides(a, &sum.minus(&a.one_like()))?));
            }
            QuotientKind::ConnectedNonLocal => {
                if let Some((u, v)) = &self.witness {
                    out.push(("witnesses nonunits mod a", !is_comaximal(u, a)? && !is_comaximal(v, a)?));
                    out.push(("witnesses comaximal", is_comaximal(u, v)?));
                } else {
                    out.push(("witness present", false));
                }
                out.push(("single minimal prime", self.minimal_primes == 1));
            }
        }
        Ok(out)
    }
}

/// How an almost-stable-range-1 verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlmostSr1Method {
    TrivialQuotient,
    /// Every unimodular pair of `Z/m` was reduced explicitly.
    Enumerated { modulus: u64 },
    /// The quotient is finite or a finite-dimensional algebra, hence semilocal.
    Semilocal,
    /// A unimodular pair of the quotient admits no reduction.
    Witness,
}

#[derive(Debug, Clone)]
pub struct AlmostSr1Verdict<R> {
    pub almost_sr1: bool,
    pub method: AlmostSr1Method,
    pub witness: Option<(R, R)>,
}

/// Whether every unimodular pair `(x, y)` of `Z/m` has some `t` with
/// `x + y*t` a unit.
pub fn residue_ring_has_sr1(m: u64) -> bool {
    if m <= 1 {
        return true;
    }
    let unit: Vec<bool> = (0..m).map(|r| num_integer::gcd(r, m) == 1).collect();
    for x in 0..m {
        for y in 0..m {
            if num_integer::gcd(num_integer::gcd(x, y), m) != 1 {
                continue;
            }
            if !(0..m).any(|t| unit[((x + y * t) % m) as usize]) {
                return false;
            }
        }
    }
    true
}

/// Whether `R/aR` has stable range 1.
pub fn is_almost_sr1<R: Instance>(a: &R) -> Result<AlmostSr1Verdict<R>> {
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    let verdict = |almost_sr1, method, witness| AlmostSr1Verdict { almost_sr1, method, witness };
    if a.is_unit() {
        return Ok(verdict(true, AlmostSr1Method::TrivialQuotient, None));
    }
    match a.shape()? {
        Shape::Radical { .. } => {
            let (u, v) = (a.from_i64_like(3), a.from_i64_like(5));
            if R::sr1_decide(&u, &v)?.is_some() {
                return Err(Error::SearchExhausted(format!("3 + 5t reduces modulo {a}")));
            }
            Ok(verdict(false, AlmostSr1Method::Witness, Some((u, v))))
        }
        _ => match integer_modulus(a)?.and_then(|m| m.to_u64()) {
            Some(m) if m <= SR1_ENUMERATION_LIMIT => Ok(verdict(
                residue_ring_has_sr1(m),
                AlmostSr1Method::Enumerated { modulus: m },
                None,
            )),
            _ => Ok(verdict(true, AlmostSr1Method::Semilocal, None)),
        },
    }
}

impl<R: Instance> AlmostSr1Verdict<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut out = vec![("verdict matches witness", self.almost_sr1 == self.witness.is_none())];
        if let Some((u, v)) = &self.witness {
            // u + v*t is a unit mod a iff it is comaximal to a; over H with a
            // radical this depends only on constant terms
            let reducible = R::sr1_decide(u, v)?.is_some();
            out.push(("witness comaximal", is_comaximal(u, v)?));
            out.push(("witness irreducible modulo a", !reducible && !is_comaximal(u, a)?));
        }
        if let AlmostSr1Method::Enumerated { modulus } = self.method {
            out.push(("enumeration reproduces", residue_ring_has_sr1(modulus) == self.almost_sr1));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialKind {
    LocalQuotient,
    NonunitAdequate,
    NonunitNeat,
}

impl SpecialKind {
    pub fn name(self) -> &'static str {
        match self {
            SpecialKind::LocalQuotient => "local-quotient",
            SpecialKind::NonunitAdequate => "nonunit-adequate",
            SpecialKind::NonunitNeat => "nonunit-neat",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        [Self::LocalQuotient, Self::NonunitAdequate, Self::NonunitNeat]
            .into_iter()
            .find(|k| k.name() == text)
    }
}

/// Number of enumerated nonunits inspected before giving up.
pub const SPECIAL_SEARCH_LIMIT: usize = 64;

/// First nonunit in the ring's enumeration order passing the predicate.
pub fn find_special_elements<R: Instance>(like: &R, kind: SpecialKind) -> Result<R> {
    for a in R::enumerate_nonunits(like, SPECIAL_SEARCH_LIMIT) {
        let ok = match kind {
            SpecialKind::LocalQuotient => match quotient_descriptor(&a) {
                Ok(q) => q.kind == QuotientKind::Local,
                Err(Error::UnsupportedRing { .. }) => false,
                Err(e) => return Err(e),
            },
            SpecialKind::NonunitAdequate => is_adequate(&a)?.adequate,
            SpecialKind::NonunitNeat => is_neat(&a)?.neat,
        };
        if ok {
            return Ok(a);
        }
    }
    Err(Error::SearchExhausted(format!("no {} element found", kind.name())))
}
