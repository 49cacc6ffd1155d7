use crate::classifier::{all_pass, unimodular, NeatDecomposition, Report};
use crate::classifier::decompose::neat_decompose;
use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::numbers::Int;
use crate::ring::{coprime_part, is_comaximal, BezoutDomain, GcdCert, RingKind};
use crate::search::{signed_grid, signed_line, GRID_RADIUS};

/// `(x, y)` with `(a + c*x)R + (b + c*y)R = R`.
#[derive(Debug, Clone)]
pub struct Sr2Cert<R> {
    pub x: R,
    pub y: R,
    pub gcd: GcdCert<R>,
}

/// `x + lambda*y = r*s` with `(r, s)` a neat decomposition against `(z, t)`.
#[derive(Debug, Clone)]
pub struct NeatRangeCert<R> {
    pub lambda: R,
    pub decomposition: NeatDecomposition<R>,
}

/// `t` with `a + b*t` a unit, or `None` when no such `t` exists. The answer is
/// a decision: a congruence test over Z and on constant terms over H, a
/// remainder test over Q[x].
pub fn sr1_reduce<R: Instance>(a: &R, b: &R) -> Result<Option<R>> {
    if !is_comaximal(a, b)? {
        return Err(Error::NotUnimodular(format!("{a}, {b}")));
    }
    let t = R::sr1_decide(a, b)?;
    if let Some(t) = &t {
        debug_assert!(a.plus(&b.times(t)).is_unit());
    }
    Ok(t)
}

/// Reduces a unimodular triple to a unimodular pair.
///
/// The pairs `(x, y)` of constants with `|x|, |y| <= 3` are tried first,
/// smallest `|y|` then smallest `|x|`; then the direct construction (`x` the
/// largest factor of `b` comaximal to `a`, `y = 0`, computed on constant terms
/// over H); then constants up to the grid radius.
pub fn sr2_reduce<R: Instance>(a: &R, b: &R, c: &R) -> Result<Sr2Cert<R>> {
    if !unimodular(&[a.clone(), b.clone(), c.clone()])? {
        return Err(Error::NotUnimodular(format!("{a}, {b}, {c}")));
    }
    let attempt = |x: &R, y: &R| -> Result<Option<Sr2Cert<R>>> {
        let gcd = a.plus(&c.times(x)).gcd_ext(&b.plus(&c.times(y)))?;
        Ok(gcd.g.is_unit().then(|| Sr2Cert {
            x: x.clone(),
            y: y.clone(),
            gcd,
        }))
    };
    let grid = |radius: i64| {
        signed_grid(radius)
            .into_iter()
            .map(|(y, x)| (a.from_i64_like(x), a.from_i64_like(y)))
    };
    for (x, y) in grid(3) {
        if let Some(cert) = attempt(&x, &y)? {
            return Ok(cert);
        }
    }
    if let Some((x, y)) = sr2_direct(a, b)? {
        if let Some(cert) = attempt(&x, &y)? {
            return Ok(cert);
        }
    }
    for (x, y) in grid(GRID_RADIUS) {
        if let Some(cert) = attempt(&x, &y)? {
            return Ok(cert);
        }
    }
    Err(Error::SearchExhausted(format!("sr2 ({a}, {b}, {c})")))
}

fn sr2_direct<R: Instance>(a: &R, b: &R) -> Result<Option<(R, R)>> {
    if R::KIND == RingKind::Henriksen {
        let (Some(a0), Some(b0)) = (a.constant_level(), b.constant_level()) else {
            return Ok(None);
        };
        return Ok(sr2_direct_generic::<Int>(&a0, &b0)?
            .map(|(x, y)| (a.from_int_like(&x), a.from_int_like(&y))));
    }
    sr2_direct_generic(a, b)
}

// Every prime of b either divides a (and then not c) or divides x.
fn sr2_direct_generic<R: BezoutDomain>(a: &R, b: &R) -> Result<Option<(R, R)>> {
    if b.is_zero() {
        return Ok(Some((a.zero_like(), a.one_like())));
    }
    Ok(coprime_part(b, a)?.map(|x| (x, a.zero_like())))
}

/// Finds `lambda` with `x + lambda*y` neat against `(z, t)`, scanning
/// `lambda = 0, 1, -1, 2, -2, ...` up to the grid radius.
pub fn neat_range_reduce<R: Instance>(x: &R, y: &R, z: &R, t: &R) -> Result<NeatRangeCert<R>> {
    if !is_comaximal(x, y)? {
        return Err(Error::NotUnimodular(format!("{x}, {y}")));
    }
    if !is_comaximal(z, t)? {
        return Err(Error::NotUnimodular(format!("{z}, {t}")));
    }
    for l in signed_line(GRID_RADIUS) {
        let lambda = x.from_i64_like(l);
        let w = x.plus(&lambda.times(y));
        if w.is_zero() {
            continue;
        }
        match neat_decompose(&w, z, t) {
            Ok(decomposition) => return Ok(NeatRangeCert { lambda, decomposition }),
            Err(Error::NotNeat { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SearchExhausted(format!("neat range ({x}, {y}, {z}, {t})")))
}

impl<R: BezoutDomain> Sr2Cert<R> {
    pub fn check(&self, a: &R, b: &R, c: &R) -> Report {
        let first = a.plus(&c.times(&self.x));
        let second = b.plus(&c.times(&self.y));
        let mut out = self.gcd.check(&first, &second);
        out.push(("gcd is a unit", self.gcd.g.is_unit()));
        out
    }
}

impl<R: BezoutDomain> NeatRangeCert<R> {
    pub fn check(&self, x: &R, y: &R, z: &R, t: &R) -> Result<Report> {
        let w = x.plus(&self.lambda.times(y));
        self.decomposition.check(&w, z, t)
    }

    pub fn holds(&self, x: &R, y: &R, z: &R, t: &R) -> Result<bool> {
        Ok(all_pass(&self.check(x, y, z, t)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{HSeries, Poly, DEFAULT_PRECISION};
    use crate::numbers::Rat;

    const N: usize = DEFAULT_PRECISION;

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    fn h(n: i64) -> HSeries {
        HSeries::integer(n, N)
    }

    fn one_plus_x() -> HSeries {
        HSeries::exact(z(1), vec![Rat::from_integer(z(1))], N)
    }

    #[test]
    fn sr1_examples() {
        assert_eq!(sr1_reduce(&z(7), &z(3)).unwrap(), Some(z(-2)));
        assert_eq!(sr1_reduce(&z(3), &z(5)).unwrap(), None);
        assert_eq!(sr1_reduce(&h(3), &h(5)).unwrap(), None);
        let a = Poly::from_ints(&[1, 1, 1]);
        let t = sr1_reduce(&a, &Poly::x()).unwrap().unwrap();
        assert_eq!(t, Poly::from_ints(&[-1, -1]));
        assert!(matches!(sr1_reduce(&z(4), &z(6)), Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn sr2_examples() {
        let cert = sr2_reduce(&z(4), &z(6), &z(9)).unwrap();
        assert_eq!((cert.x.clone(), cert.y.clone()), (z(1), z(0)));
        assert!(all_pass(&cert.check(&z(4), &z(6), &z(9))));

        let x = HSeries::x(N);
        let cert = sr2_reduce(&x, &h(3), &h(5)).unwrap();
        assert_eq!((cert.x.clone(), cert.y.clone()), (h(1), h(0)));
        assert!(all_pass(&cert.check(&x, &h(3), &h(5))));

        let cert = sr2_reduce(&z(5), &z(7), &z(10)).unwrap();
        assert_eq!((cert.x, cert.y), (z(0), z(0)));
    }

    #[test]
    fn sr2_direct_construction() {
        // a and b share 2 and 3, which c avoids
        let (a, b, c) = (z(2 * 3 * 5 * 7), z(2 * 3 * 11 * 13 * 17), z(5 * 7 * 11 * 13 * 17 * 19));
        let (x, y) = sr2_direct_generic(&a, &b).unwrap().unwrap();
        assert_eq!((x.clone(), y.clone()), (z(11 * 13 * 17), z(0)));
        assert!(a.plus(&c.times(&x)).gcd_ext(&b.plus(&c.times(&y))).unwrap().g.is_unit());
        let cert = sr2_reduce(&a, &b, &c).unwrap();
        assert!(all_pass(&cert.check(&a, &b, &c)));
        assert_eq!(sr2_direct_generic(&z(6), &z(0)).unwrap(), Some((z(0), z(1))));
    }

    #[test]
    fn neat_range_examples() {
        let cert = neat_range_reduce(&z(3), &z(5), &z(2), &z(3)).unwrap();
        assert!(cert.holds(&z(3), &z(5), &z(2), &z(3)).unwrap());
        assert_eq!(cert.lambda, z(0));

        let x = HSeries::x(N);
        let cert = neat_range_reduce(&x, &h(1), &h(2), &h(3)).unwrap();
        assert_eq!(cert.lambda, h(1));
        assert_eq!(cert.decomposition.r, one_plus_x());
        assert!(cert.decomposition.s.is_unit());

        let cert = neat_range_reduce(&h(3), &h(5), &one_plus_x(), &x).unwrap();
        assert_eq!(cert.lambda, h(0));
        assert_eq!(cert.decomposition.r, h(3));
        assert_eq!(cert.decomposition.s, h(1));
    }
}
