//! Independent oracles shared by the integration suites. Nothing here calls
//! into the library's decision procedures; elements of H are handled as dense
//! rational coefficient vectors.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use bezout::{HSeries, Int, Rat};

pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn all_pass(report: &[(&str, bool)]) -> bool {
    report.iter().all(|(_, ok)| *ok)
}

/// Exact element of H from dense coefficients (index 0 is the constant).
pub fn h_dense(dense: &[Rat], prec: usize) -> HSeries {
    HSeries::from_dense(dense, prec).expect("integral constant term")
}

pub fn to_dense(a: &HSeries) -> Vec<Rat> {
    let mut out = vec![Rat::from_integer(a.constant_term().clone())];
    out.extend(a.higher_coeffs().iter().cloned());
    trim(out)
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

pub fn dense_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn order(a: &[Rat]) -> Option<usize> {
    a.iter().position(|c| !c.is_zero())
}

fn coeff(a: &[Rat], i: usize) -> Rat {
    a.get(i).cloned().unwrap_or_else(Rat::zero)
}

/// `a | b` in Z + xQ[[x]] by long division of the series `b/a`: the quotient
/// exists in Q[[x]] iff `ord a <= ord b`, and lies in H iff its constant term
/// is an integer. The computed quotient is multiplied back through `x^prec`.
pub fn oracle_divides(a: &[Rat], b: &[Rat], prec: usize) -> bool {
    let Some(j) = order(a) else {
        return order(b).is_none();
    };
    let Some(k) = order(b) else {
        return true;
    };
    if k < j {
        return false;
    }
    let lead = coeff(a, j);
    let mut quot: Vec<Rat> = Vec::new();
    for i in 0..=prec.saturating_sub(j) {
        let mut acc = coeff(b, i + j);
        for (l, ql) in quot.iter().enumerate() {
            acc -= ql * coeff(a, j + i - l);
        }
        quot.push(acc / &lead);
    }
    let back = dense_mul(a, &quot);
    assert!((0..=prec).all(|i| coeff(&back, i) == coeff(b, i)), "long division is self-consistent");
    quot[0].is_integer()
}

/// Generator of `aH + bH` from the shape of the inputs: the integer gcd of
/// the constant terms when either is nonzero, otherwise the lower-order
/// monomial, with a rational gcd of leading coefficients on a tie.
pub fn oracle_h_gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (Some(j), Some(k)) = (order(a), order(b)) else {
        return if order(a).is_none() { b.to_vec() } else { a.to_vec() };
    };
    let (a0, b0) = (coeff(a, 0).to_integer(), coeff(b, 0).to_integer());
    if !a0.is_zero() || !b0.is_zero() {
        return vec![Rat::from_integer(a0.gcd(&b0))];
    }
    let (order, c) = if j < k {
        (j, coeff(a, j))
    } else if k < j {
        (k, coeff(b, k))
    } else {
        let (c, d) = (coeff(a, j), coeff(b, k));
        let num = c.numer().gcd(d.numer());
        let den = c.denom().lcm(d.denom());
        (j, Rat::new(num, den))
    };
    let mut out = vec![Rat::zero(); order + 1];
    out[order] = c.abs();
    out
}

/// Prime factorization by trial division, ascending.
pub fn trial_division(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All `e` in `0..n` with `e*e = e (mod n)`.
pub fn brute_idempotents(n: u64) -> Vec<u64> {
    (0..n).filter(|e| e * e % n == *e).collect()
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

/// Fixed CLI commands; `args[2]` is the subcommand.
pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase { name: "01-gcd-z", args: &["--ring", "Z", "gcd", "12", "18"], exit: 0 },
    GoldenCase { name: "02-gcd-qx", args: &["--ring", "Qx", "gcd", "x^2 - 1", "x^2 + 2*x + 1"], exit: 0 },
    GoldenCase { name: "03-classify-h-x", args: &["--ring", "H", "classify", "x"], exit: 0 },
    GoldenCase { name: "04-classify-h-6", args: &["--ring", "H", "classify", "6"], exit: 0 },
    GoldenCase { name: "05-factor-z", args: &["--ring", "Z", "factor", "360"], exit: 0 },
    GoldenCase { name: "06-neat-h", args: &["--ring", "H", "neat", "10", "5", "7"], exit: 0 },
    GoldenCase { name: "07-adequate-h", args: &["--ring", "H", "adequate", "x", "2"], exit: 1 },
    GoldenCase { name: "08-sr1-h", args: &["--ring", "H", "sr1", "3", "5"], exit: 1 },
    GoldenCase { name: "09-sr2-z", args: &["--ring", "Z", "sr2", "4", "6", "9"], exit: 0 },
    GoldenCase { name: "10-snf-h", args: &["--ring", "H", "snf", "x,0;2,3"], exit: 0 },
    GoldenCase { name: "11-quotient-z", args: &["--ring", "Z", "quotient", "12"], exit: 0 },
    GoldenCase { name: "12-find-h", args: &["--ring", "H", "find", "local-quotient"], exit: 0 },
];

pub fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_bezout"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"))
}
