mod common;

use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

use bezout::classifier::{comax_factor, idempotent_mod, is_nontrivial_idempotent, is_pseudo_irreducible};
use bezout::grammar::ElementGrammar;
use bezout::instances::Order;
use bezout::matrix::{smith, Matrix};
use bezout::numbers::{int_gcd_ext, rat_canonical};
use bezout::ring::{associates, basis_exponents, coprime_basis, divides, is_comaximal};
use bezout::{BezoutDomain, HSeries, Int, Poly, Rat, DEFAULT_PRECISION};

use common::*;

const N: usize = DEFAULT_PRECISION;

fn rat() -> impl Strategy<Value = Rat> {
    (-30i64..=30, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rat> {
    rat().prop_filter("nonzero", |c| !c.is_zero())
}

/// Exact element of H: constant term or leading monomial `c*x^k`, then a short tail.
fn h_elem() -> impl Strategy<Value = HSeries> {
    (0usize..=3, -40i64..=40, nonzero_rat(), prop::collection::vec(rat(), 0..4)).prop_map(|(k, z0, c, tail)| {
        let mut dense = vec![Rat::zero(); k + 1];
        dense[k] = if k == 0 { q(z0, 1) } else { c };
        dense.extend(tail);
        h_dense(&dense, N)
    })
}

fn h_nonzero() -> impl Strategy<Value = HSeries> {
    h_elem().prop_filter("nonzero", |a| !a.is_zero())
}

fn h_unit() -> impl Strategy<Value = HSeries> {
    (prop::bool::ANY, prop::collection::vec(rat(), 0..4)).prop_map(|(neg, tail)| {
        let mut dense = vec![q(if neg { -1 } else { 1 }, 1)];
        dense.extend(tail);
        h_dense(&dense, N)
    })
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(rat(), 0..4).prop_map(Poly::new)
}

fn nil(n: &Int) -> bool {
    Zero::is_zero(n)
}

fn ord(a: &HSeries) -> usize {
    match a.order() {
        Order::At(k) => k,
        other => panic!("unexpected order {other:?}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn int_gcd_ext_identity(a in -10_000i64..=10_000, b in -10_000i64..=10_000) {
        let (a, b) = (Int::from(a), Int::from(b));
        let (g, u, v) = int_gcd_ext(&a, &b);
        prop_assert_eq!(&u * &a + &v * &b, g.clone());
        if !nil(&g) {
            prop_assert!(nil(&(&a % &g)) && nil(&(&b % &g)));
        }
        prop_assert_eq!(g, a.gcd(&b));
    }

    #[test]
    fn rat_canonical_is_idempotent(n in -1000i64..=1000, d in 1i64..=1000, s in prop::bool::ANY) {
        let d = if s { -d } else { d };
        let once = rat_canonical(Int::from(n), Int::from(d)).unwrap();
        let twice = rat_canonical(once.numer().clone(), once.denom().clone()).unwrap();
        prop_assert_eq!(once, twice);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn canonical_class_constant_on_associates(a in h_elem(), u in h_unit()) {
        prop_assert_eq!(a.times(&u).canonical_class().unwrap(), a.canonical_class().unwrap());
    }

    #[test]
    fn order_is_multiplicative(a in h_nonzero(), b in h_nonzero()) {
        prop_assert_eq!(ord(&a.times(&b)), ord(&a) + ord(&b));
    }

    #[test]
    fn h_gcd_matches_class_table(a in h_elem(), b in h_elem(), d in h_nonzero()) {
        let g = a.gcd_ext(&b).unwrap().g;
        let (da, db, dg) = (to_dense(&a), to_dense(&b), to_dense(&g));
        prop_assert!(oracle_divides(&dg, &da, N) && oracle_divides(&dg, &db, N));
        let e = oracle_h_gcd(&da, &db);
        prop_assert!(oracle_divides(&e, &dg, N) && oracle_divides(&dg, &e, N));
        // a common divisor of d*a and d*b divides their gcd
        let (ma, mb) = (d.times(&a), d.times(&b));
        prop_assert!(divides(&d, &ma.gcd_ext(&mb).unwrap().g).unwrap());
    }

    #[test]
    fn divisibility_is_a_preorder(a in h_nonzero(), b in h_elem(), c in h_elem(), u in h_unit()) {
        prop_assert!(divides(&a, &a.times(&u)).unwrap());
        let (ab, abc) = (a.times(&b), a.times(&b).times(&c));
        prop_assert!(divides(&a, &ab).unwrap() && divides(&ab, &abc).unwrap());
        prop_assert!(divides(&a, &abc).unwrap());
        for (x, y) in [(&a, &b), (&b, &c), (&a, &c)] {
            let by_gcd = associates(&x.gcd_ext(y).unwrap().g, x).unwrap();
            prop_assert_eq!(divides(x, y).unwrap(), by_gcd);
        }
    }

    #[test]
    fn integer_divisibility_agrees_with_gcd(a in -500i64..=500, b in -500i64..=500) {
        let (a, b) = (Int::from(a), Int::from(b));
        let by_gcd = associates(&a.gcd_ext(&b).unwrap().g, &a).unwrap();
        let oracle = if nil(&a) { nil(&b) } else { nil(&(&b % &a)) };
        prop_assert_eq!(divides(&a, &b).unwrap(), oracle);
        prop_assert_eq!(by_gcd, oracle);
    }

    #[test]
    fn h_split_iff_idempotent(a in h_nonzero()) {
        prop_assume!(!a.is_unit());
        let v = is_pseudo_irreducible(&a).unwrap();
        prop_assert!(all_pass(&v.check(&a).unwrap()));
        let idem = idempotent_mod(&a).unwrap();
        let f = comax_factor(&a).unwrap();
        prop_assert_eq!(!v.pseudo_irreducible, idem.is_some());
        prop_assert_eq!(!v.pseudo_irreducible, f.factors.len() >= 2);
        if let Some(e) = idem {
            prop_assert!(is_nontrivial_idempotent(&a, &e).unwrap());
            // oracle on the constant term: e^2 = e, e != 0, 1 modulo m
            let m = a.constant_term().clone();
            let e0 = e.constant_term().clone();
            prop_assert!(nil(&(&e0 * &e0 - &e0).mod_floor(&m)));
            prop_assert!(!nil(&e0.mod_floor(&m)) && !nil(&(&e0 - Int::from(1)).mod_floor(&m)));
        }
    }

    #[test]
    fn comax_factors_multiply_back(a in h_nonzero()) {
        prop_assume!(!a.is_unit());
        let f = comax_factor(&a).unwrap();
        let product = f.factors.iter().fold(f.unit.clone(), |acc, x| acc.times(x));
        prop_assert!(product.approx_eq(&a));
        prop_assert!(f.unit.is_unit());
        for (i, x) in f.factors.iter().enumerate() {
            prop_assert!(is_pseudo_irreducible(x).unwrap().pseudo_irreducible);
            for y in &f.factors[i + 1..] {
                prop_assert!(is_comaximal(x, y).unwrap());
            }
        }
    }

    #[test]
    fn coprime_basis_integers(elems in prop::collection::vec(2i64..=2000, 1..5)) {
        let elems: Vec<Int> = elems.into_iter().map(Int::from).collect();
        let basis = coprime_basis(&elems).unwrap();
        for (i, p) in basis.iter().enumerate() {
            for r in &basis[i + 1..] {
                prop_assert!(is_comaximal(p, r).unwrap());
            }
        }
        for e in &elems {
            let (exps, unit) = basis_exponents(e, &basis).unwrap();
            let rebuilt = basis.iter().zip(&exps).fold(unit, |acc, (p, k)| acc * p.pow(*k as u32));
            prop_assert_eq!(&rebuilt, e);
        }
    }

    #[test]
    fn coprime_basis_polynomials(elems in prop::collection::vec(poly(), 1..4)) {
        let elems: Vec<Poly> = elems.into_iter().filter(|p| !p.is_zero()).collect();
        prop_assume!(!elems.is_empty());
        let basis = coprime_basis(&elems).unwrap();
        for (i, p) in basis.iter().enumerate() {
            for r in &basis[i + 1..] {
                prop_assert!(is_comaximal(p, r).unwrap());
            }
        }
        for e in &elems {
            let (exps, unit) = basis_exponents(e, &basis).unwrap();
            let mut rebuilt = unit;
            for (p, k) in basis.iter().zip(&exps) {
                for _ in 0..*k {
                    rebuilt = rebuilt.times(p);
                }
            }
            prop_assert_eq!(&rebuilt, e);
        }
    }

    #[test]
    fn smith_is_idempotent(entries in prop::collection::vec(h_elem(), 4)) {
        let m = Matrix::from_rows(vec![entries[..2].to_vec(), entries[2..].to_vec()]).unwrap();
        let d = smith(&m).unwrap().d;
        let again = smith(&d).unwrap();
        for (x, y) in again.diagonal().iter().zip((0..2).map(|i| d.get(i, i))) {
            prop_assert!(associates(x, y).unwrap());
        }
    }

    #[test]
    fn h_render_parse_round_trip(a in h_elem()) {
        let text = a.to_string();
        let back = HSeries::parse_with(&text, N).unwrap();
        prop_assert!(back.approx_eq(&a));
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn poly_render_parse_round_trip(p in poly()) {
        let text = p.to_string();
        let back = Poly::parse_with(&text, N).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }
}

#[test]
fn integer_split_iff_idempotent_exhaustive() {
    for n in 2u64..=500 {
        let a = Int::from(n);
        let connected = brute_idempotents(n).len() == 2;
        let v = is_pseudo_irreducible(&a).unwrap();
        let idem = idempotent_mod(&a).unwrap();
        let f = comax_factor(&a).unwrap();
        assert_eq!(v.pseudo_irreducible, connected, "n = {n}");
        assert_eq!(idem.is_some(), !connected, "n = {n}");
        assert_eq!(f.factors.len() == 1, connected, "n = {n}");
        if let Some(s) = v.split {
            assert_eq!(&s.b * &s.c, a);
            assert!(is_comaximal(&s.b, &s.c).unwrap());
        }
    }
}
