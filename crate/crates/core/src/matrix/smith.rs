use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{divides, BezoutDomain};

/// `P * A * Q = D` with `P`, `Q` unimodular and `D` diagonal with
/// `d_ii | d_(i+1)(i+1)` and canonical entries.
#[derive(Debug, Clone)]
pub struct SmithCert<R> {
    pub p: Matrix<R>,
    pub q: Matrix<R>,
    pub d: Matrix<R>,
    /// Degree through which the Henriksen entries of `P * A * Q` are known.
    pub verified_precision: Option<usize>,
}

const STEP_LIMIT: usize = 10_000;

/// Smith form by pivot elimination.
///
/// The pivot is the entry of smallest descent measure in the remaining block.
/// Its row and column are cleared by exact subtraction where the pivot divides,
/// otherwise by a 2x2 Bezout transform that replaces the pivot by a gcd. When
/// the pivot fails to divide some later entry, that entry's row is added to
/// the pivot row and elimination repeats.
pub fn smith<R: BezoutDomain>(a: &Matrix<R>) -> Result<SmithCert<R>> {
    let (n, m) = (a.rows(), a.cols());
    let like = a.sample().clone();
    let mut d = a.clone();
    let mut p = Matrix::identity(n, &like);
    let mut q = Matrix::identity(m, &like);
    let mut steps = 0usize;
    for t in 0..n.min(m) {
        let Some((pi, pj)) = pick_pivot(&d, t)? else {
            break;
        };
        d.swap_rows(t, pi);
        p.swap_rows(t, pi);
        d.swap_cols(t, pj);
        q.swap_cols(t, pj);
        loop {
            steps += 1;
            if steps > STEP_LIMIT {
                return Err(Error::SearchExhausted("smith elimination step limit".into()));
            }
            clear_column(&mut d, &mut p, t)?;
            clear_row(&mut d, &mut q, t)?;
            if (t + 1..n).any(|i| !d.get(i, t).is_zero()) {
                continue;
            }
            match offending_row(&d, t)? {
                Some(i) => {
                    let one = like.one_like();
                    let zero = like.zero_like();
                    d.combine_rows(t, i, [&one, &one, &zero, &one]);
                    p.combine_rows(t, i, [&one, &one, &zero, &one]);
                }
                None => break,
            }
        }
        let (canon, unit) = d.get(t, t).split_unit()?;
        if !unit.approx_eq(&unit.one_like()) {
            let inv = unit.unit_inverse()?;
            d.scale_row(t, &inv);
            p.scale_row(t, &inv);
        }
        d.set(t, t, canon);
    }
    let verified_precision = p
        .mul(a)?
        .mul(&q)?
        .to_rows()
        .iter()
        .flatten()
        .filter_map(BezoutDomain::known_precision)
        .min();
    Ok(SmithCert {
        p,
        q,
        d,
        verified_precision,
    })
}

fn pick_pivot<R: BezoutDomain>(d: &Matrix<R>, t: usize) -> Result<Option<(usize, usize)>> {
    let mut best: Option<((usize, crate::numbers::Int), (usize, usize))> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let e = d.get(i, j);
            if e.is_zero() {
                continue;
            }
            let key = e.shape()?.descent_measure();
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, (i, j)));
            }
        }
    }
    Ok(best.map(|(_, pos)| pos))
}

fn clear_column<R: BezoutDomain>(d: &mut Matrix<R>, p: &mut Matrix<R>, t: usize) -> Result<()> {
    for i in t + 1..d.rows() {
        let b = d.get(i, t).clone();
        if b.is_zero() {
            continue;
        }
        let a = d.get(t, t).clone();
        if a.is_zero() {
            d.swap_rows(t, i);
            p.swap_rows(t, i);
            continue;
        }
        match b.div_exact(&a) {
            Ok(f) => {
                d.sub_row_multiple(i, t, &f);
                p.sub_row_multiple(i, t, &f);
            }
            Err(Error::NotDivisible { .. }) => {
                let c = a.gcd_ext(&b)?;
                let nb1 = c.b1.negate();
                let tr = [&c.u, &c.v, &nb1, &c.a1];
                d.combine_rows(t, i, tr);
                p.combine_rows(t, i, tr);
                d.set(t, t, c.g.clone());
            }
            Err(e) => return Err(e),
        }
        d.set(i, t, b.zero_like());
    }
    Ok(())
}

fn clear_row<R: BezoutDomain>(d: &mut Matrix<R>, q: &mut Matrix<R>, t: usize) -> Result<()> {
    for j in t + 1..d.cols() {
        let b = d.get(t, j).clone();
        if b.is_zero() {
            continue;
        }
        let a = d.get(t, t).clone();
        if a.is_zero() {
            d.swap_cols(t, j);
            q.swap_cols(t, j);
            continue;
        }
        match b.div_exact(&a) {
            Ok(f) => {
                d.sub_col_multiple(j, t, &f);
                q.sub_col_multiple(j, t, &f);
            }
            Err(Error::NotDivisible { .. }) => {
                let c = a.gcd_ext(&b)?;
                let nb1 = c.b1.negate();
                let tr = [&c.u, &nb1, &c.v, &c.a1];
                d.combine_cols(t, j, tr);
                q.combine_cols(t, j, tr);
                d.set(t, t, c.g.clone());
            }
            Err(e) => return Err(e),
        }
        d.set(t, j, b.zero_like());
    }
    Ok(())
}

// First row below `t` holding an entry the pivot does not divide.
fn offending_row<R: BezoutDomain>(d: &Matrix<R>, t: usize) -> Result<Option<usize>> {
    let pivot = d.get(t, t);
    for i in t + 1..d.rows() {
        for j in t + 1..d.cols() {
            if !divides(pivot, d.get(i, j))? {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

impl<R: BezoutDomain> SmithCert<R> {
    /// Re-derives every certificate property from `a` by ring arithmetic.
    pub fn check(&self, a: &Matrix<R>) -> Result<Vec<(&'static str, bool)>> {
        let product = self.p.mul(a)?.mul(&self.q)?;
        let diag: Vec<R> = (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect();
        let mut chain = true;
        for w in diag.windows(2) {
            chain &= divides(&w[0], &w[1])?;
        }
        let mut canonical = true;
        for e in &diag {
            canonical &= e.split_unit()?.0.approx_eq(e);
        }
        Ok(vec![
            ("P*A*Q = D", product.approx_eq(&self.d)),
            ("det(P) is a unit", self.p.determinant()?.is_unit()),
            ("det(Q) is a unit", self.q.determinant()?.is_unit()),
            ("D is diagonal", self.d.is_diagonal()),
            ("d_ii divides d_(i+1)(i+1)", chain),
            ("diagonal entries canonical", canonical),
        ])
    }

    pub fn diagonal(&self) -> Vec<R> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i).clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{HSeries, DEFAULT_PRECISION};
    use crate::matrix::minor_gcd_chain;
    use crate::numbers::{Int, Rat};
    use crate::ring::associates;

    fn zm(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
            .unwrap()
    }

    fn diag(cert: &SmithCert<Int>) -> Vec<i64> {
        cert.diagonal().iter().map(|v| i64::try_from(v).unwrap()).collect()
    }

    fn certified<R: BezoutDomain>(a: &Matrix<R>) -> SmithCert<R> {
        let cert = smith(a).unwrap();
        let report = cert.check(a).unwrap();
        assert!(report.iter().all(|(_, ok)| *ok), "{report:?}");
        cert
    }

    #[test]
    fn integer_examples() {
        assert_eq!(diag(&certified(&zm(&[&[2, 0], &[3, 5]]))), vec![1, 10]);
        assert_eq!(diag(&certified(&zm(&[&[2, 4], &[6, 8]]))), vec![2, 4]);
        assert_eq!(diag(&certified(&zm(&[&[1, 0], &[0, 6]]))), vec![1, 6]);
        assert_eq!(diag(&certified(&zm(&[&[0, 0, 0], &[0, 0, 0]]))), vec![0, 0]);
        assert_eq!(diag(&certified(&zm(&[&[4, 0], &[0, 6]]))), vec![2, 12]);
    }

    #[test]
    fn henriksen_example() {
        let p = DEFAULT_PRECISION;
        let a = Matrix::from_rows(vec![
            vec![HSeries::x(p), HSeries::integer(0, p)],
            vec![HSeries::integer(2, p), HSeries::integer(3, p)],
        ])
        .unwrap();
        let cert = certified(&a);
        let three_x = HSeries::monomial(Rat::from_integer(Int::from(3)), 1, p).unwrap();
        assert!(cert.d.get(0, 0).approx_eq(&HSeries::integer(1, p)));
        assert!(cert.d.get(1, 1).approx_eq(&three_x));
    }

    #[test]
    fn idempotent_on_its_output() {
        let a = zm(&[&[6, 4, 2], &[9, 3, 12], &[0, 8, 10]]);
        let first = certified(&a);
        let again = certified(&first.d);
        assert!(again.d.approx_eq(&first.d));
    }

    #[test]
    fn agrees_with_determinantal_divisors() {
        let a = zm(&[&[6, 4, 2, 8], &[9, 3, 12, -3], &[0, 8, 10, 4]]);
        let cert = certified(&a);
        let chain = minor_gcd_chain(&a).unwrap();
        let mut prod = Int::from(1);
        for (k, d) in cert.diagonal().iter().enumerate() {
            prod *= d;
            assert!(associates(&prod, &chain[k]).unwrap());
        }
    }
}
