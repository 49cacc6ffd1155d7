//! Seeded random elements for sampled checks and property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::instances::{HSeries, Poly};
use crate::numbers::{Int, Rat};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational with `|num| <= max_num`, `1 <= den <= max_den`.
pub fn rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    Rat::new(
        Int::from(rng.gen_range(-max_num..=max_num)),
        Int::from(rng.gen_range(1..=max_den)),
    )
}

pub fn nonzero_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    loop {
        let q = rational(rng, max_num, max_den);
        if q != Rat::from_integer(Int::from(0)) {
            return q;
        }
    }
}

/// Random desk-scale elements of a ring.
pub trait Sample: Sized {
    /// A random element; zero is possible but rare.
    fn sample(like: &Self, rng: &mut ChaCha8Rng) -> Self;

    /// A random nonzero element with zero image in every residue field of
    /// characteristic zero; only the Henriksen ring has such elements.
    fn sample_radical(like: &Self, rng: &mut ChaCha8Rng) -> Option<Self>;
}

impl Sample for Int {
    fn sample(_like: &Self, rng: &mut ChaCha8Rng) -> Self {
        Int::from(rng.gen_range(-1000i64..=1000))
    }

    fn sample_radical(_like: &Self, _rng: &mut ChaCha8Rng) -> Option<Self> {
        None
    }
}

impl Sample for Poly {
    fn sample(_like: &Self, rng: &mut ChaCha8Rng) -> Self {
        let degree = rng.gen_range(0..=3);
        Poly::new((0..=degree).map(|_| rational(rng, 9, 4)).collect())
    }

    fn sample_radical(_like: &Self, _rng: &mut ChaCha8Rng) -> Option<Self> {
        None
    }
}

impl Sample for HSeries {
    /// Half the draws have a nonzero constant term, half start at `x^k`,
    /// `1 <= k <= 3`; up to three further rational coefficients follow.
    fn sample(like: &Self, rng: &mut ChaCha8Rng) -> Self {
        if rng.gen_bool(0.5) {
            let z0 = Int::from(rng.gen_range(-60i64..=60));
            let tail = rng.gen_range(0..=3);
            let coeffs = (0..tail).map(|_| rational(rng, 20, 12)).collect();
            HSeries::exact(z0, coeffs, like.precision())
        } else {
            Self::sample_radical(like, rng).expect("H has a radical")
        }
    }

    fn sample_radical(like: &Self, rng: &mut ChaCha8Rng) -> Option<Self> {
        let k = rng.gen_range(1..=3usize);
        let mut coeffs = vec![Rat::from_integer(Int::from(0)); k - 1];
        coeffs.push(nonzero_rational(rng, 20, 12));
        for _ in 0..rng.gen_range(0..=3) {
            coeffs.push(rational(rng, 20, 12));
        }
        Some(HSeries::exact(Int::from(0), coeffs, like.precision()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{Order, DEFAULT_PRECISION};

    #[test]
    fn seeded_draws_repeat() {
        let like = HSeries::integer(0, DEFAULT_PRECISION);
        let a: Vec<String> = {
            let mut r = rng(7);
            (0..20).map(|_| HSeries::sample(&like, &mut r).to_string()).collect()
        };
        let b: Vec<String> = {
            let mut r = rng(7);
            (0..20).map(|_| HSeries::sample(&like, &mut r).to_string()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn radical_draws_have_positive_order() {
        let like = HSeries::integer(0, DEFAULT_PRECISION);
        let mut r = rng(1);
        for _ in 0..50 {
            let e = HSeries::sample_radical(&like, &mut r).unwrap();
            assert!(matches!(e.order(), Order::At(k) if k >= 1));
        }
    }
}
