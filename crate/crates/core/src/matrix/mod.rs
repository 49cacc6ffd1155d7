//! Dense matrices over a ring instance, with Hermite and Smith forms.

mod hermite;
mod kaplansky;
mod minors;
mod smith;

pub use hermite::{hermite, HermiteForm};
pub use kaplansky::{kaplansky_solve, KaplanskyCert};
pub use minors::{minor_gcd_chain, MINOR_SIZE_LIMIT};
pub use smith::{smith, SmithCert};

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::BezoutDomain;

#[derive(Debug, Clone)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: BezoutDomain> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if n == 0 || m == 0 {
            return Err(Error::DimensionMismatch("matrices need at least one row and column".into()));
        }
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::DimensionMismatch("rows have different lengths".into()));
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn identity(n: usize, like: &R) -> Self {
        let mut data = vec![like.zero_like(); n * n];
        for i in 0..n {
            data[i * n + i] = like.one_like();
        }
        Matrix { rows: n, cols: n, data }
    }

    pub fn zeros(rows: usize, cols: usize, like: &R) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![like.zero_like(); rows * cols],
        }
    }

    pub fn diagonal(entries: &[R], rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols, &entries[0]);
        for (i, e) in entries.iter().enumerate().take(rows.min(cols)) {
            out.set(i, i, e.clone());
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.data[i * self.cols + j] = value;
    }

    pub fn sample(&self) -> &R {
        &self.data[0]
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Matrix<R>) -> Result<Matrix<R>> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let like = self.sample();
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = like.zero_like();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), rhs.get(k, j));
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.plus(&a.times(b));
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        })
    }

    pub fn approx_eq(&self, other: &Matrix<R>) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BezoutDomain::is_zero)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Rows `(i, k)` replaced by `[[p, q], [r, s]] * (row_i, row_k)`.
    pub(crate) fn combine_rows(&mut self, i: usize, k: usize, t: [&R; 4]) {
        let [p, q, r, s] = t;
        for j in 0..self.cols {
            let (a, b) = (self.get(i, j).clone(), self.get(k, j).clone());
            if a.is_zero() && b.is_zero() {
                continue;
            }
            self.set(i, j, lin(p, &a, q, &b));
            self.set(k, j, lin(r, &a, s, &b));
        }
    }

    /// Columns `(j, k)` replaced by `(col_j, col_k) * [[p, q], [r, s]]`, i.e.
    /// `col_j <- p*col_j + r*col_k`, `col_k <- q*col_j + s*col_k`.
    pub(crate) fn combine_cols(&mut self, j: usize, k: usize, t: [&R; 4]) {
        let [p, q, r, s] = t;
        for i in 0..self.rows {
            let (a, b) = (self.get(i, j).clone(), self.get(i, k).clone());
            if a.is_zero() && b.is_zero() {
                continue;
            }
            self.set(i, j, lin(p, &a, r, &b));
            self.set(i, k, lin(q, &a, s, &b));
        }
    }

    /// `row_k <- row_k - f * row_i`.
    pub(crate) fn sub_row_multiple(&mut self, k: usize, i: usize, f: &R) {
        for j in 0..self.cols {
            let a = self.get(i, j);
            if a.is_zero() {
                continue;
            }
            let v = self.get(k, j).minus(&f.times(a));
            self.set(k, j, v);
        }
    }

    /// `col_k <- col_k - f * col_j`.
    pub(crate) fn sub_col_multiple(&mut self, k: usize, j: usize, f: &R) {
        for i in 0..self.rows {
            let a = self.get(i, j);
            if a.is_zero() {
                continue;
            }
            let v = self.get(i, k).minus(&f.times(a));
            self.set(i, k, v);
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, f: &R) {
        for j in 0..self.cols {
            let v = self.get(i, j).times(f);
            self.set(i, j, v);
        }
    }

    pub(crate) fn scale_col(&mut self, j: usize, f: &R) {
        for i in 0..self.rows {
            let v = self.get(i, j).times(f);
            self.set(i, j, v);
        }
    }

    /// Determinant: cofactor expansion up to 5x5, fraction-free elimination
    /// beyond.
    pub fn determinant(&self) -> Result<R> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("determinant of a non-square matrix".into()));
        }
        if self.rows <= 5 {
            let idx: Vec<usize> = (0..self.rows).collect();
            Ok(self.minor(&idx, &idx))
        } else {
            self.bareiss()
        }
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> R {
        debug_assert_eq!(rows.len(), cols.len());
        let like = self.sample();
        match rows.len() {
            0 => like.one_like(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => self
                .get(rows[0], cols[0])
                .times(self.get(rows[1], cols[1]))
                .minus(&self.get(rows[0], cols[1]).times(self.get(rows[1], cols[0]))),
            _ => {
                let mut acc = like.zero_like();
                let sub_rows = &rows[1..];
                for (pos, &c) in cols.iter().enumerate() {
                    let entry = self.get(rows[0], c);
                    if entry.is_zero() {
                        continue;
                    }
                    let sub_cols: Vec<usize> =
                        cols.iter().copied().filter(|&x| x != c).collect();
                    let term = entry.times(&self.minor(sub_rows, &sub_cols));
                    acc = if pos % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
                }
                acc
            }
        }
    }

    fn bareiss(&self) -> Result<R> {
        let n = self.rows;
        let mut m = self.clone();
        let mut prev = self.sample().one_like();
        let mut negate = false;
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return Ok(self.sample().zero_like()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m
                        .get(i, j)
                        .times(m.get(k, k))
                        .minus(&m.get(i, k).times(m.get(k, j)));
                    m.set(i, j, num.div_exact(&prev)?);
                }
            }
            prev = m.get(k, k).clone();
        }
        let d = m.get(n - 1, n - 1).clone();
        Ok(if negate { d.negate() } else { d })
    }
}

fn lin<R: BezoutDomain>(p: &R, a: &R, q: &R, b: &R) -> R {
    let left = if p.is_zero() || a.is_zero() { None } else { Some(p.times(a)) };
    let right = if q.is_zero() || b.is_zero() { None } else { Some(q.times(b)) };
    match (left, right) {
        (Some(l), Some(r)) => l.plus(&r),
        (Some(l), None) => l,
        (None, Some(r)) => r,
        (None, None) => a.zero_like(),
    }
}

impl<R: BezoutDomain> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::Int;

    fn zm(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn determinant_routes_agree() {
        let a = zm(&[
            &[2, -1, 0, 3, 1, 4],
            &[1, 5, -2, 0, 2, 1],
            &[0, 3, 4, -1, 1, 0],
            &[7, 0, 1, 2, -3, 2],
            &[1, 1, 1, 1, 1, 5],
            &[0, 2, -1, 3, 0, 1],
        ]);
        let idx: Vec<usize> = (0..6).collect();
        assert_eq!(a.bareiss().unwrap(), a.minor(&idx, &idx));
        let b = zm(&[&[0, 1], &[1, 0]]);
        assert_eq!(b.determinant().unwrap(), Int::from(-1));
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let r = Matrix::from_rows(vec![vec![Int::from(1)], vec![]]);
        assert!(matches!(r, Err(Error::DimensionMismatch(_))));
    }
}
