use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::BezoutDomain;

/// Largest matrix dimension accepted by the minor enumeration.
pub const MINOR_SIZE_LIMIT: usize = 5;

/// Determinantal divisors: entry `k - 1` is the canonical gcd of all `k x k`
/// minors, for `k = 1 ..= min(rows, cols)`.
pub fn minor_gcd_chain<R: BezoutDomain>(a: &Matrix<R>) -> Result<Vec<R>> {
    if a.rows() > MINOR_SIZE_LIMIT || a.cols() > MINOR_SIZE_LIMIT {
        return Err(Error::MatrixTooLarge {
            rows: a.rows(),
            cols: a.cols(),
            limit: MINOR_SIZE_LIMIT,
        });
    }
    let like = a.sample();
    let depth = a.rows().min(a.cols());
    let mut chain = Vec::with_capacity(depth);
    for k in 1..=depth {
        let mut g = like.zero_like();
        for rows in subsets(a.rows(), k) {
            for cols in subsets(a.cols(), k) {
                let m = a.minor(&rows, &cols);
                if !m.is_zero() {
                    g = g.gcd_ext(&m)?.g;
                }
            }
        }
        chain.push(g);
    }
    Ok(chain)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{HSeries, DEFAULT_PRECISION};
    use crate::numbers::{Int, Rat};

    fn zm(rows: &[&[i64]]) -> Matrix<Int> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn integer_chain() {
        let chain = minor_gcd_chain(&zm(&[&[2, 4], &[6, 8]])).unwrap();
        assert_eq!(chain, vec![Int::from(2), Int::from(8)]);
        let zero = minor_gcd_chain(&zm(&[&[0, 0], &[0, 0]])).unwrap();
        assert_eq!(zero, vec![Int::from(0), Int::from(0)]);
    }

    #[test]
    fn henriksen_chain() {
        let p = DEFAULT_PRECISION;
        let a = Matrix::from_rows(vec![
            vec![HSeries::x(p), HSeries::integer(0, p)],
            vec![HSeries::integer(2, p), HSeries::integer(3, p)],
        ])
        .unwrap();
        let chain = minor_gcd_chain(&a).unwrap();
        assert!(chain[0].is_unit());
        let three_x = HSeries::monomial(Rat::from_integer(Int::from(3)), 1, p).unwrap();
        assert!(chain[1].approx_eq(&three_x));
    }

    #[test]
    fn size_cap() {
        let big = Matrix::zeros(6, 2, &Int::from(0));
        assert!(matches!(minor_gcd_chain(&big), Err(Error::MatrixTooLarge { .. })));
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
