use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::numbers::Int;
use crate::ring::{coprime_part, gcd_all, BezoutDomain, GcdCert, RingKind};
use crate::search::{signed_grid, GRID_RADIUS};

/// `(p, q)` with `(p*a)R + (p*b + q*c)R = R`, plus the gcd certificate of
/// that pair.
#[derive(Debug, Clone)]
pub struct KaplanskyCert<R> {
    pub p: R,
    pub q: R,
    pub first: R,
    pub second: R,
    pub gcd: GcdCert<R>,
}

/// Solves the diagonal-reduction condition for the triangular block
/// `[[a, b], [0, c]]` with `aR + bR + cR = R`.
///
/// A short constant grid is scanned first, then a direct construction (over
/// Z and Q[x]: `p = 1`, `q` = largest factor of `a` comaximal to `b`; over H
/// the same construction on constant terms), then the full grid. Every
/// candidate is accepted only through a verified gcd certificate.
pub fn kaplansky_solve<R: Instance>(a: &R, b: &R, c: &R) -> Result<KaplanskyCert<R>> {
    let g = gcd_all(a, &[a.clone(), b.clone(), c.clone()])?;
    if !g.is_unit() {
        return Err(Error::NotUnimodular(format!("{a}, {b}, {c}")));
    }
    let attempt = |p: &R, q: &R| -> Result<Option<KaplanskyCert<R>>> {
        let first = p.times(a);
        let second = p.times(b).plus(&q.times(c));
        let gcd = first.gcd_ext(&second)?;
        Ok(gcd.g.is_unit().then(|| KaplanskyCert {
            p: p.clone(),
            q: q.clone(),
            first,
            second,
            gcd,
        }))
    };
    let candidates = |radius: i64| {
        signed_grid(radius)
            .into_iter()
            .filter(|(p, _)| *p != 0)
            .map(|(p, q)| (a.from_i64_like(p), a.from_i64_like(q)))
    };
    for (p, q) in candidates(3) {
        if let Some(cert) = attempt(&p, &q)? {
            return Ok(cert);
        }
    }
    if let Some((p, q)) = direct(a, b, c)? {
        if let Some(cert) = attempt(&p, &q)? {
            return Ok(cert);
        }
    }
    for (p, q) in candidates(GRID_RADIUS) {
        if let Some(cert) = attempt(&p, &q)? {
            return Ok(cert);
        }
    }
    Err(Error::SearchExhausted(format!("kaplansky ({a}, {b}, {c})")))
}

fn direct<R: Instance>(a: &R, b: &R, c: &R) -> Result<Option<(R, R)>> {
    if R::KIND == RingKind::Henriksen {
        let (Some(a0), Some(b0), Some(c0)) = (a.constant_level(), b.constant_level(), c.constant_level())
        else {
            return Ok(None);
        };
        return Ok(direct_generic(&a0, &b0, &c0)?
            .map(|(p, q): (Int, Int)| (a.from_int_like(&p), a.from_int_like(&q))));
    }
    direct_generic(a, b, c)
}

fn direct_generic<R: BezoutDomain>(a: &R, b: &R, c: &R) -> Result<Option<(R, R)>> {
    if a.is_zero() {
        let cert = b.gcd_ext(c)?;
        return Ok(Some((cert.u, cert.v)));
    }
    Ok(coprime_part(a, b)?.map(|q| (a.one_like(), q)))
}
