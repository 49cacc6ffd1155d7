use crate::error::Result;
use crate::matrix::Matrix;
use crate::ring::BezoutDomain;

/// `A * u = t` with `u` unimodular and `t` in column echelon form.
#[derive(Debug, Clone)]
pub struct HermiteForm<R> {
    pub u: Matrix<R>,
    pub t: Matrix<R>,
}

/// Column-echelon triangularization by 2x2 Bezout column transforms.
///
/// For each row the entries right of the current pivot column are folded into
/// the pivot with `[[u, -b1], [v, a1]]` (determinant `u*a1 + v*b1 = 1`), and
/// the pivot is normalized to its canonical associate.
pub fn hermite<R: BezoutDomain>(a: &Matrix<R>) -> Result<HermiteForm<R>> {
    let (n, m) = (a.rows(), a.cols());
    let mut t = a.clone();
    let mut u = Matrix::identity(m, a.sample());
    let mut col = 0;
    for i in 0..n {
        if col >= m {
            break;
        }
        for k in col + 1..m {
            if t.get(i, k).is_zero() {
                continue;
            }
            if t.get(i, col).is_zero() {
                t.swap_cols(col, k);
                u.swap_cols(col, k);
                continue;
            }
            let cert = t.get(i, col).gcd_ext(t.get(i, k))?;
            let neg_b1 = cert.b1.negate();
            let transform = [&cert.u, &neg_b1, &cert.v, &cert.a1];
            t.combine_cols(col, k, transform);
            u.combine_cols(col, k, transform);
            t.set(i, col, cert.g.clone());
            t.set(i, k, cert.g.zero_like());
        }
        if t.get(i, col).is_zero() {
            continue;
        }
        let (canon, unit) = t.get(i, col).split_unit()?;
        if !unit.approx_eq(&unit.one_like()) {
            let inv = unit.unit_inverse()?;
            t.scale_col(col, &inv);
            u.scale_col(col, &inv);
            t.set(i, col, canon);
        }
        col += 1;
    }
    Ok(HermiteForm { u, t })
}

impl<R: BezoutDomain> HermiteForm<R> {
    pub fn check(&self, a: &Matrix<R>) -> Result<Vec<(&'static str, bool)>> {
        let product = a.mul(&self.u)?;
        let det = self.u.determinant()?;
        // column echelon: first nonzero rows strictly increase, zero columns last
        let mut echelon = true;
        let mut last_row: Option<usize> = None;
        let mut seen_zero_col = false;
        for j in 0..self.t.cols() {
            match (0..self.t.rows()).find(|&i| !self.t.get(i, j).is_zero()) {
                None => seen_zero_col = true,
                Some(i) => {
                    echelon &= !seen_zero_col && last_row.map_or(true, |r| i > r);
                    echelon &= self
                        .t
                        .get(i, j)
                        .split_unit()
                        .map(|(c, _)| c.approx_eq(self.t.get(i, j)))
                        .unwrap_or(false);
                    last_row = Some(i);
                }
            }
        }
        Ok(vec![
            ("A*U = T", product.approx_eq(&self.t)),
            ("det(U) is a unit", det.is_unit()),
            ("T in column echelon form with canonical pivots", echelon),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::henriksen::{HSeries, DEFAULT_PRECISION};
    use crate::numbers::Int;

    fn zm(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn integer_row() {
        let a = zm(&[&[2, 4]]);
        let h = hermite(&a).unwrap();
        assert!(h.t.approx_eq(&zm(&[&[2, 0]])));
        assert!(h.check(&a).unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn henriksen_row() {
        let p = DEFAULT_PRECISION;
        let a = Matrix::from_rows(vec![vec![HSeries::x(p), HSeries::integer(2, p)]]).unwrap();
        let h = hermite(&a).unwrap();
        assert!(h.t.get(0, 0).approx_eq(&HSeries::integer(2, p)));
        assert!(h.t.get(0, 1).is_zero());
        assert!(h.check(&a).unwrap().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn zero_matrix_is_fixed() {
        let a = zm(&[&[0, 0], &[0, 0]]);
        let h = hermite(&a).unwrap();
        assert!(h.t.approx_eq(&a));
        assert!(h.u.approx_eq(&Matrix::identity(2, &Int::from(0))));
    }

    #[test]
    fn tall_integer_matrix() {
        let a = zm(&[&[0, 6, 4], &[3, 5, 1], &[2, 2, 2], &[9, -1, 7]]);
        let h = hermite(&a).unwrap();
        assert!(h.check(&a).unwrap().iter().all(|(_, ok)| *ok), "{:?}", h.check(&a));
    }
}
