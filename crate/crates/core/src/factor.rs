//! Integer factorization by trial division with an explicit bound.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numbers::Int;

pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

/// Prime factorization `[(p, e)]` of `|n|`, primes ascending. `|n| <= 1`
/// yields an empty list. Fails when a trial divisor beyond `bound` would be
/// needed to certify the remaining cofactor as prime.
pub fn trial_factor(n: &Int, bound: u64) -> Result<Vec<(Int, u32)>> {
    let n = n.abs();
    if n <= Int::one() {
        return Ok(Vec::new());
    }
    if let Some(small) = n.to_u64() {
        return trial_factor_u64(small, bound)
            .map(|fs| fs.into_iter().map(|(p, e)| (Int::from(p), e)).collect());
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d: u64 = 2;
    loop {
        let dd = Int::from(d);
        if &dd * &dd > rest {
            break;
        }
        if d > bound {
            return Err(Error::FactorizationBoundExceeded {
                n: n.to_string(),
                bound,
            });
        }
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&dd);
            if !r.is_zero() {
                break;
            }
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((dd, e));
            if let Some(small) = rest.to_u64() {
                let tail = trial_factor_from(small, d + 1, bound).map_err(|_| {
                    Error::FactorizationBoundExceeded {
                        n: n.to_string(),
                        bound,
                    }
                })?;
                out.extend(tail.into_iter().map(|(p, e)| (Int::from(p), e)));
                return Ok(out);
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > Int::one() {
        out.push((rest, 1));
    }
    Ok(out)
}

fn trial_factor_u64(n: u64, bound: u64) -> Result<Vec<(u64, u32)>> {
    trial_factor_from(n, 2, bound).map_err(|_| Error::FactorizationBoundExceeded {
        n: n.to_string(),
        bound,
    })
}

fn trial_factor_from(mut n: u64, start: u64, bound: u64) -> std::result::Result<Vec<(u64, u32)>, ()> {
    let mut out = Vec::new();
    let mut d = start.max(2);
    if d > 2 && d % 2 == 0 {
        d += 1;
    }
    while (d as u128) * (d as u128) <= n as u128 {
        if d > bound {
            return Err(());
        }
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// `Some((p, e))` when `|n| = p^e` with `e >= 1`.
pub fn prime_power(n: &Int, bound: u64) -> Result<Option<(Int, u32)>> {
    let fs = trial_factor(n, bound)?;
    Ok(match fs.as_slice() {
        [(p, e)] => Some((p.clone(), *e)),
        _ => None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fac(n: i64) -> Vec<(i64, u32)> {
        trial_factor(&Int::from(n), DEFAULT_TRIAL_BOUND)
            .unwrap()
            .into_iter()
            .map(|(p, e)| (p.to_i64().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(fac(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(fac(-97), vec![(97, 1)]);
        assert_eq!(fac(1), vec![]);
        assert_eq!(fac(0), vec![]);
        assert_eq!(fac(1 << 20), vec![(2, 20)]);
    }

    #[test]
    fn large_inputs_beyond_u64() {
        // 2^70 * 3 * 1000003
        let n = (Int::one() << 70) * Int::from(3) * Int::from(1_000_003);
        let fs = trial_factor(&n, DEFAULT_TRIAL_BOUND).unwrap();
        assert_eq!(
            fs,
            vec![(Int::from(2), 70), (Int::from(3), 1), (Int::from(1_000_003), 1)]
        );
    }

    #[test]
    fn bound_is_enforced() {
        // product of two primes above the bound
        let n = Int::from(1_000_003u64) * Int::from(1_000_033u64);
        assert!(matches!(
            trial_factor(&n, DEFAULT_TRIAL_BOUND),
            Err(Error::FactorizationBoundExceeded { .. })
        ));
        assert!(matches!(
            trial_factor(&Int::from(10_007 * 10_009), 100),
            Err(Error::FactorizationBoundExceeded { .. })
        ));
        assert_eq!(fac(10_007 * 10_009), vec![(10_007, 1), (10_009, 1)]);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(
            prime_power(&Int::from(81), DEFAULT_TRIAL_BOUND).unwrap(),
            Some((Int::from(3), 4))
        );
        assert_eq!(prime_power(&Int::from(12), DEFAULT_TRIAL_BOUND).unwrap(), None);
    }
}
