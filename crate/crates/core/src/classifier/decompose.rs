use crate::classifier::{all_pass, Report};
use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::numbers::bit_length;
use crate::ring::{coprime_part, divides, is_comaximal, pow, BezoutDomain, RingKind, Shape};

/// `a = r*s` with `rR + bR = R`, `sR + cR = R`, `rR + sR = R`.
#[derive(Debug, Clone)]
pub struct NeatDecomposition<R> {
    pub r: R,
    pub s: R,
}

/// `a = r*s` with `rR + bR = R` and `s | b^exponent`, which forces every
/// nonunit divisor of `s` to share a nonunit factor with `b`.
#[derive(Debug, Clone)]
pub struct AdequateDecomposition<R> {
    pub r: R,
    pub s: R,
    pub exponent: usize,
}

/// Neatness of `a`; a negative verdict names a comaximal pair `(b, c)`
/// against which no decomposition exists.
#[derive(Debug, Clone)]
pub struct NeatVerdict<R> {
    pub neat: bool,
    pub witness: Option<(R, R)>,
}

/// Adequacy of `a`; a negative verdict names a `b` against which the
/// decomposition loop stagnates.
#[derive(Debug, Clone)]
pub struct AdequacyVerdict<R> {
    pub adequate: bool,
    pub witness: Option<R>,
}

impl<R: BezoutDomain> NeatDecomposition<R> {
    pub fn check(&self, a: &R, b: &R, c: &R) -> Result<Report> {
        Ok(vec![
            ("a = r*s", self.r.times(&self.s).approx_eq(a)),
            ("rR + bR = R", is_comaximal(&self.r, b)?),
            ("sR + cR = R", is_comaximal(&self.s, c)?),
            ("rR + sR = R", is_comaximal(&self.r, &self.s)?),
        ])
    }
}

impl<R: BezoutDomain> AdequateDecomposition<R> {
    pub fn check(&self, a: &R, b: &R) -> Result<Report> {
        Ok(vec![
            ("a = r*s", self.r.times(&self.s).approx_eq(a)),
            ("rR + bR = R", is_comaximal(&self.r, b)?),
            ("s divides b^N", divides(&self.s, &pow(b, self.exponent))?),
        ])
    }
}

/// Splits `a` against a comaximal pair `(b, c)`.
///
/// Candidates, each verified: `r` the largest factor of `a` comaximal to `b`;
/// `s` the largest factor comaximal to `c`; and the trivial splits `(1, a)`,
/// `(a, 1)`. Over H a radical `a` has no other splits into comaximal factors,
/// so exhausting these decides neatness there.
pub fn neat_decompose<R: Instance>(a: &R, b: &R, c: &R) -> Result<NeatDecomposition<R>> {
    if !is_comaximal(b, c)? {
        return Err(Error::NotUnimodular(format!("{b}, {c}")));
    }
    let not_neat = || Error::NotNeat {
        a: a.to_string(),
        b: b.to_string(),
        c: c.to_string(),
    };
    if a.is_zero() {
        return Err(not_neat());
    }
    let mut candidates = Vec::new();
    if let Some(r) = coprime_part(a, b)? {
        let s = a.div_exact(&r)?;
        candidates.push((r, s));
    }
    if let Some(s) = coprime_part(a, c)? {
        candidates.push((a.div_exact(&s)?, s));
    }
    candidates.push((a.one_like(), a.clone()));
    candidates.push((a.clone(), a.one_like()));
    for (r, s) in candidates {
        let dec = NeatDecomposition { r, s };
        if all_pass(&dec.check(a, b, c)?) {
            return Ok(dec);
        }
    }
    Err(not_neat())
}

/// Neatness of `a`. Z and Q[x] are adequate domains, so every element is
/// neat; in H exactly the units and integer classes are.
pub fn is_neat<R: Instance>(a: &R) -> Result<NeatVerdict<R>> {
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    if R::KIND == RingKind::Henriksen {
        if let Shape::Radical { .. } = a.shape()? {
            let (b, c) = (a.from_i64_like(3), a.from_i64_like(5));
            return match neat_decompose(a, &b, &c) {
                Err(Error::NotNeat { .. }) => Ok(NeatVerdict {
                    neat: false,
                    witness: Some((b, c)),
                }),
                Err(e) => Err(e),
                Ok(_) => Err(Error::SearchExhausted(format!(
                    "{a} unexpectedly splits against (3, 5)"
                ))),
            };
        }
    }
    Ok(NeatVerdict {
        neat: true,
        witness: None,
    })
}

/// Strips from `a` every factor shared with `b`. Fails with `NotAdequate`
/// when a nonunit common factor can be removed without shrinking `a`, as for
/// `x` against `2` in H.
pub fn adequate_decompose<R: Instance>(a: &R, b: &R) -> Result<AdequateDecomposition<R>> {
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    let Some(r) = coprime_part(a, b)? else {
        return Err(Error::NotAdequate {
            a: a.to_string(),
            b: b.to_string(),
        });
    };
    let s = a.div_exact(&r)?;
    let exponent = match s.shape()? {
        Shape::Zero | Shape::Unit => 0,
        Shape::Integer(m) => bit_length(&m),
        Shape::Polynomial { degree } => degree,
        Shape::Radical { order, .. } => order + 1,
    };
    Ok(AdequateDecomposition { r, s, exponent })
}

/// Adequacy of `a`. Z and Q[x] are adequate domains; in H a radical element
/// fails against `b = 2`.
pub fn is_adequate<R: Instance>(a: &R) -> Result<AdequacyVerdict<R>> {
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    if R::KIND == RingKind::Henriksen {
        if let Shape::Radical { .. } = a.shape()? {
            let b = a.from_i64_like(2);
            return match adequate_decompose(a, &b) {
                Err(Error::NotAdequate { .. }) => Ok(AdequacyVerdict {
                    adequate: false,
                    witness: Some(b),
                }),
                Err(e) => Err(e),
                Ok(_) => Err(Error::SearchExhausted(format!(
                    "{a} unexpectedly decomposes against 2"
                ))),
            };
        }
    }
    Ok(AdequacyVerdict {
        adequate: true,
        witness: None,
    })
}

impl<R: Instance> NeatVerdict<R> {
    /// A negative verdict is re-derived by rerunning the exhaustive split
    /// search against the witness pair.
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut out = vec![("verdict matches witness", self.neat == self.witness.is_none())];
        if let Some((b, c)) = &self.witness {
            out.push(("witness pair comaximal", is_comaximal(b, c)?));
            out.push((
                "no split against the witness",
                matches!(neat_decompose(a, b, c), Err(Error::NotNeat { .. })),
            ));
        }
        Ok(out)
    }
}

impl<R: Instance> AdequacyVerdict<R> {
    pub fn check(&self, a: &R) -> Result<Report> {
        let mut out = vec![("verdict matches witness", self.adequate == self.witness.is_none())];
        if let Some(b) = &self.witness {
            // the stripping loop cannot shrink a
            let d = a.gcd_ext(b)?.g;
            let rest = a.div_exact(&d)?;
            out.push(("gcd(a, b) nonunit", !d.is_unit()));
            out.push((
                "a/gcd(a, b) keeps the descent measure of a",
                rest.shape()?.descent_measure() == a.shape()?.descent_measure(),
            ));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{HSeries, Poly, DEFAULT_PRECISION};
    use crate::numbers::Int;

    const N: usize = DEFAULT_PRECISION;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    fn h(n: i64) -> HSeries {
        HSeries::integer(n, N)
    }

    #[test]
    fn neat_examples() {
        let d = neat_decompose(&z(12), &z(2), &z(3)).unwrap();
        assert_eq!((d.r, d.s), (z(3), z(4)));
        let d = neat_decompose(&h(10), &h(5), &h(7)).unwrap();
        assert_eq!((d.r, d.s), (h(2), h(5)));
        let x = HSeries::x(N);
        assert!(matches!(neat_decompose(&x, &h(3), &h(5)), Err(Error::NotNeat { .. })));
        assert!(matches!(
            neat_decompose(&z(12), &z(2), &z(4)),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn neat_verdicts() {
        let x = HSeries::x(N);
        let v = is_neat(&x).unwrap();
        assert!(!v.neat);
        assert_eq!(v.witness, Some((h(3), h(5))));
        assert!(all_pass(&v.check(&x).unwrap()));
        assert!(is_neat(&h(12)).unwrap().neat);
        assert!(is_neat(&h(-1)).unwrap().neat);
        assert!(is_neat(&Poly::x()).unwrap().neat);
    }

    #[test]
    fn adequate_examples() {
        let d = adequate_decompose(&z(12), &z(2)).unwrap();
        assert_eq!((d.r.clone(), d.s.clone()), (z(3), z(4)));
        assert!(all_pass(&d.check(&z(12), &z(2)).unwrap()));
        let d = adequate_decompose(&z(12), &z(5)).unwrap();
        assert_eq!((d.r, d.s), (z(12), z(1)));

        let x = HSeries::x(N);
        assert!(matches!(adequate_decompose(&x, &h(2)), Err(Error::NotAdequate { .. })));

        let a = Poly::from_ints(&[0, 0, 1, 1]);
        let d = adequate_decompose(&a, &Poly::x()).unwrap();
        assert_eq!((d.r.clone(), d.s.clone()), (Poly::from_ints(&[1, 1]), Poly::from_ints(&[0, 0, 1])));
        assert!(all_pass(&d.check(&a, &Poly::x()).unwrap()));
    }

    #[test]
    fn adequacy_verdicts() {
        let x = HSeries::x(N);
        let v = is_adequate(&x).unwrap();
        assert!(!v.adequate);
        assert_eq!(v.witness, Some(h(2)));
        assert!(all_pass(&v.check(&x).unwrap()));
        assert!(is_adequate(&h(2)).unwrap().adequate);
        assert!(is_adequate(&h(1)).unwrap().adequate);
    }

    #[test]
    fn radical_elements_decompose_against_radical_b() {
        let two_x = HSeries::x(N).times(&h(2));
        let x = HSeries::x(N);
        let d = adequate_decompose(&two_x, &x).unwrap();
        assert!(d.r.is_unit());
        assert!(all_pass(&d.check(&two_x, &x).unwrap()));
    }
}
