use serde_json::{json, Value};

use crate::classifier::{
    adequate_decompose, comax_factor, find_special_elements, is_adequate, is_almost_sr1, is_neat,
    is_pseudo_irreducible, neat_decompose, quotient_descriptor_with_seed, sr1_reduce, sr2_reduce,
    AlmostSr1Method, AlmostSr1Verdict, Connectedness, PseudoIrrVerdict, QuotientDescriptor,
    SpecialKind,
};
use crate::cli::{error_value, Command, Context, Outcome};
use crate::error::{Error, Result};
use crate::grammar::parse_matrix;
use crate::instances::Instance;
use crate::matrix::{minor_gcd_chain, smith, Matrix, MINOR_SIZE_LIMIT};
use crate::ring::{associates, basis_exponents, coprime_basis, is_comaximal, BezoutDomain, RingKind, Shape};

fn parse<R: Instance>(text: &str, ctx: Context) -> Result<R> {
    R::parse_with(text, ctx.precision)
}

fn el<R: BezoutDomain>(r: &R) -> Value {
    Value::String(r.to_string())
}

fn matrix_value<R: BezoutDomain>(m: &Matrix<R>) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|row| Value::Array(row.iter().map(el).collect()))
            .collect(),
    )
}

/// Associate-class label: `IntClass(m)` / `JClass(c, k)` over H,
/// `Integer(m)` over Z, `Polynomial(d)` over Q[x].
fn class_label<R: BezoutDomain>(a: &R) -> Result<String> {
    let h = R::KIND == RingKind::Henriksen;
    Ok(match a.shape()? {
        Shape::Zero => "Zero".into(),
        Shape::Unit => "Unit".into(),
        Shape::Integer(m) if h => format!("IntClass({m})"),
        Shape::Integer(m) => format!("Integer({m})"),
        Shape::Radical { coefficient, order } => format!("JClass({coefficient}, {order})"),
        Shape::Polynomial { degree } => format!("Polynomial({degree})"),
    })
}

pub(crate) fn run<R: Instance>(cmd: &Command, ctx: Context) -> Result<Outcome> {
    let mut out = Outcome::new();
    match cmd {
        Command::Gcd { a, b } => {
            let (a, b) = (parse::<R>(a, ctx)?, parse::<R>(b, ctx)?);
            out.input("a", el(&a));
            out.input("b", el(&b));
            let cert = a.gcd_ext(&b)?;
            out.output("g", el(&cert.g));
            out.output("u", el(&cert.u));
            out.output("v", el(&cert.v));
            out.output("a1", el(&cert.a1));
            out.output("b1", el(&cert.b1));
            out.output("comaximal", cert.g.is_unit());
            out.verify("gcd", cert.check(&a, &b));
        }
        Command::Classify { a } => classify::<R>(&parse(a, ctx)?, ctx, &mut out)?,
        Command::Factor { elems } => {
            let elems = elems.iter().map(|t| parse::<R>(t, ctx)).collect::<Result<Vec<_>>>()?;
            out.input("elements", Value::Array(elems.iter().map(el).collect()));
            if elems.len() == 1 && R::KIND != RingKind::RationalPolynomials {
                let a = &elems[0];
                let f = comax_factor(a)?;
                out.output("kind", "comaximal-factorization");
                out.output("unit", el(&f.unit));
                out.output("factors", Value::Array(f.factors.iter().map(el).collect()));
                out.verify("factorization", f.check(a)?);
            } else {
                let basis = coprime_basis(&elems)?;
                let mut recon = Vec::new();
                let mut ok = true;
                for e in &elems {
                    match basis_exponents(e, &basis) {
                        Ok((exps, unit)) => {
                            recon.push(json!({ "element": el(e), "exponents": exps, "unit": el(&unit) }))
                        }
                        Err(_) => ok = false,
                    }
                }
                let mut pairwise = true;
                for (i, p) in basis.iter().enumerate() {
                    for q in &basis[i + 1..] {
                        pairwise &= is_comaximal(p, q)?;
                    }
                }
                out.output("kind", "coprime-basis");
                out.output("basis", Value::Array(basis.iter().map(el).collect()));
                out.output("reconstruction", Value::Array(recon));
                out.verify(
                    "coprime basis",
                    vec![
                        ("basis pairwise comaximal", pairwise),
                        ("basis elements nonunits", basis.iter().all(|b| !b.is_unit())),
                        ("each input a unit times a product of basis powers", ok),
                    ],
                );
            }
        }
        Command::Neat { a, b, c } => {
            let a = parse::<R>(a, ctx)?;
            out.input("a", el(&a));
            match (b, c) {
                (Some(b), Some(c)) => {
                    let (b, c) = (parse::<R>(b, ctx)?, parse::<R>(c, ctx)?);
                    out.input("b", el(&b));
                    out.input("c", el(&c));
                    match neat_decompose(&a, &b, &c) {
                        Ok(d) => {
                            out.output("r", el(&d.r));
                            out.output("s", el(&d.s));
                            out.verify("neat decomposition", d.check(&a, &b, &c)?);
                        }
                        Err(e @ Error::NotNeat { .. }) => {
                            out.output("neat", false);
                            out.verify("inputs", vec![("bR + cR = R", is_comaximal(&b, &c)?)]);
                            out.negative = Some(error_value(&e));
                        }
                        Err(e) => return Err(e),
                    }
                }
                _ => {
                    let v = is_neat(&a)?;
                    out.output("neat", v.neat);
                    out.output("witness", witness_pair(&v.witness));
                    out.verify("neatness", v.check(&a)?);
                    if !v.neat {
                        out.negative = Some(negative("NotNeat", format!("{a} is not neat")));
                    }
                }
            }
        }
        Command::Adequate { a, b } => {
            let a = parse::<R>(a, ctx)?;
            out.input("a", el(&a));
            match b {
                Some(b) => {
                    let b = parse::<R>(b, ctx)?;
                    out.input("b", el(&b));
                    match adequate_decompose(&a, &b) {
                        Ok(d) => {
                            out.output("r", el(&d.r));
                            out.output("s", el(&d.s));
                            out.output("exponent", d.exponent);
                            out.verify("adequate decomposition", d.check(&a, &b)?);
                        }
                        Err(e @ Error::NotAdequate { .. }) => {
                            let g = a.gcd_ext(&b)?.g;
                            let rest = a.div_exact(&g)?;
                            out.output("adequate", false);
                            out.output("common_factor", el(&g));
                            out.output("remaining", el(&rest));
                            out.verify(
                                "stagnation",
                                vec![
                                    ("gcd(a, b) nonunit", !g.is_unit()),
                                    (
                                        "a/gcd(a, b) keeps the descent measure of a",
                                        rest.shape()?.descent_measure() == a.shape()?.descent_measure(),
                                    ),
                                ],
                            );
                            out.negative = Some(error_value(&e));
                        }
                        Err(e) => return Err(e),
                    }
                }
                None => {
                    let v = is_adequate(&a)?;
                    out.output("adequate", v.adequate);
                    out.output("witness", v.witness.as_ref().map_or(Value::Null, el));
                    out.verify("adequacy", v.check(&a)?);
                    if !v.adequate {
                        out.negative = Some(negative("NotAdequate", format!("{a} is not adequate")));
                    }
                }
            }
        }
        Command::Sr1 { a, b } => {
            let (a, b) = (parse::<R>(a, ctx)?, parse::<R>(b, ctx)?);
            out.input("a", el(&a));
            out.input("b", el(&b));
            match sr1_reduce(&a, &b)? {
                Some(t) => {
                    let w = a.plus(&b.times(&t));
                    out.output("t", el(&t));
                    out.output("a_plus_bt", el(&w));
                    out.verify("sr1", vec![("a + b*t is a unit", w.is_unit())]);
                }
                None => {
                    out.output("t", Value::Null);
                    out.output("decision", sr1_explanation::<R>());
                    out.verify(
                        "sr1",
                        vec![
                            ("aR + bR = R", is_comaximal(&a, &b)?),
                            ("decision procedure finds no t", R::sr1_decide(&a, &b)?.is_none()),
                        ],
                    );
                    out.negative = Some(negative(
                        "NoReduction",
                        format!("no t makes {a} + ({b})*t a unit"),
                    ));
                }
            }
        }
        Command::Sr2 { a, b, c } => {
            let (a, b, c) = (parse::<R>(a, ctx)?, parse::<R>(b, ctx)?, parse::<R>(c, ctx)?);
            out.input("a", el(&a));
            out.input("b", el(&b));
            out.input("c", el(&c));
            let cert = sr2_reduce(&a, &b, &c)?;
            out.output("x", el(&cert.x));
            out.output("y", el(&cert.y));
            out.output("a_plus_cx", el(&a.plus(&c.times(&cert.x))));
            out.output("b_plus_cy", el(&b.plus(&c.times(&cert.y))));
            out.output("u", el(&cert.gcd.u));
            out.output("v", el(&cert.gcd.v));
            out.verify("sr2", cert.check(&a, &b, &c));
        }
        Command::Snf { matrix } => {
            let m: Matrix<R> = parse_matrix(matrix, ctx.precision)?;
            out.input("matrix", matrix_value(&m));
            let cert = smith(&m)?;
            out.output("D", matrix_value(&cert.d));
            out.output("P", matrix_value(&cert.p));
            out.output("Q", matrix_value(&cert.q));
            out.output("diagonal", Value::Array(cert.diagonal().iter().map(el).collect()));
            out.output("verified_precision", cert.verified_precision);
            out.verify("smith", cert.check(&m)?);
            if m.rows() <= MINOR_SIZE_LIMIT && m.cols() <= MINOR_SIZE_LIMIT {
                let chain = minor_gcd_chain(&m)?;
                let mut prod = m.sample().one_like();
                let mut agree = true;
                for (k, d) in cert.diagonal().iter().enumerate() {
                    prod = prod.times(d);
                    agree &= associates(&prod, &chain[k])?;
                }
                out.output("determinantal_divisors", Value::Array(chain.iter().map(el).collect()));
                out.verify(
                    "minors",
                    vec![("d_11*...*d_kk associate to the gcd of k x k minors", agree)],
                );
            }
        }
        Command::Quotient { a } => {
            let a = parse::<R>(a, ctx)?;
            out.input("a", el(&a));
            let q = quotient_descriptor_with_seed(&a, ctx.seed)?;
            out.output("quotient", quotient_value(&q));
            out.verify("quotient", q.check(&a)?);
        }
        Command::Find { kind } => {
            let Some(k) = SpecialKind::parse(kind) else {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("unknown kind `{kind}`; expected local-quotient, nonunit-adequate or nonunit-neat"),
                });
            };
            out.input("kind", k.name());
            let like = R::zero_at(ctx.precision);
            let found = find_special_elements(&like, k)?;
            out.output("element", el(&found));
            out.output("enumeration", enumeration_label::<R>());
            let passes = match k {
                SpecialKind::LocalQuotient => {
                    let q = quotient_descriptor_with_seed(&found, ctx.seed)?;
                    q.kind == crate::classifier::QuotientKind::Local
                        && crate::classifier::all_pass(&q.check(&found)?)
                }
                SpecialKind::NonunitAdequate => is_adequate(&found)?.adequate,
                SpecialKind::NonunitNeat => is_neat(&found)?.neat,
            };
            out.verify(
                "find",
                vec![("element is a nonzero nonunit", !found.is_zero() && !found.is_unit()), ("predicate holds", passes)],
            );
        }
    }
    Ok(out)
}

fn negative(kind: &str, message: String) -> Value {
    json!({ "kind": kind, "message": message })
}

fn witness_pair<R: BezoutDomain>(w: &Option<(R, R)>) -> Value {
    match w {
        Some((u, v)) => json!([el(u), el(v)]),
        None => Value::Null,
    }
}

fn sr1_explanation<R: Instance>() -> &'static str {
    match R::KIND {
        RingKind::Integers => "a + b*t = ±1 has no integer solution: b divides neither 1 - a nor -1 - a",
        RingKind::Henriksen => {
            "units of H have constant term ±1, and the constant term of a + b*t ranges over a0 + b0*Z, which misses ±1"
        }
        RingKind::RationalPolynomials => {
            "a + b*t is a nonzero constant only if the remainder of a modulo b is, and it is not"
        }
    }
}

fn enumeration_label<R: Instance>() -> &'static str {
    match R::KIND {
        RingKind::Integers => "2, 3, 4, ...",
        RingKind::Henriksen => "2, x, 3, x^2, 4, x^3, ...",
        RingKind::RationalPolynomials => "x, 1 + x, x^2, -1 + x, -1 + x^2, 2 + x, ...",
    }
}

fn pseudo_value<R: Instance>(v: &PseudoIrrVerdict<R>) -> Value {
    let evidence = match &v.connected {
        Some(Connectedness::PrimePower { prime, exponent, enumerated }) => json!({
            "kind": "prime-power",
            "prime": prime.to_string(),
            "exponent": exponent,
            "residues_enumerated": enumerated,
        }),
        Some(Connectedness::Radical) => json!({ "kind": "radical" }),
        None => Value::Null,
    };
    let split = match &v.split {
        Some(s) => json!({ "b": el(&s.b), "c": el(&s.c), "idempotent": el(&s.idempotent) }),
        None => Value::Null,
    };
    json!({ "value": v.pseudo_irreducible, "connected_evidence": evidence, "split": split })
}

fn almost_value<R: Instance>(v: &AlmostSr1Verdict<R>) -> Value {
    let method = match v.method {
        AlmostSr1Method::TrivialQuotient => json!("trivial-quotient"),
        AlmostSr1Method::Enumerated { modulus } => json!({ "enumerated_modulus": modulus }),
        AlmostSr1Method::Semilocal => json!("semilocal-quotient"),
        AlmostSr1Method::Witness => json!("witness"),
    };
    json!({ "value": v.almost_sr1, "method": method, "witness": witness_pair(&v.witness) })
}

fn quotient_value<R: Instance>(q: &QuotientDescriptor<R>) -> Value {
    let components: Vec<Value> = q
        .components
        .iter()
        .map(|c| {
            json!({
                "modulus": el(&c.modulus),
                "ring": c.label,
                "valuation_ring": c.valuation_ring,
                "idempotent": c.idempotent.as_ref().map_or(Value::Null, el),
            })
        })
        .collect();
    json!({
        "kind": q.kind.name(),
        "components": components,
        "minimal_primes": q.minimal_primes,
        "witness": witness_pair(&q.witness),
        "inclusion_samples": q.inclusion_samples,
    })
}

/// Runs a sub-analysis whose failure for structural reasons (unsupported ring,
/// unit input) is reported in place rather than aborting the whole document.
fn part<T>(result: Result<T>) -> Result<std::result::Result<T, Value>> {
    match result {
        Ok(v) => Ok(Ok(v)),
        Err(e @ (Error::UnsupportedRing { .. } | Error::NotANonzeroNonunit(_))) => {
            Ok(Err(json!({ "not_applicable": e.to_string() })))
        }
        Err(e) => Err(e),
    }
}

fn classify<R: Instance>(a: &R, ctx: Context, out: &mut Outcome) -> Result<()> {
    out.input("a", el(a));
    if a.is_zero() {
        return Err(Error::NotANonzeroNonunit(a.to_string()));
    }
    out.output("class", class_label(a)?);
    match part(is_pseudo_irreducible(a))? {
        Ok(v) => {
            out.output("pseudo_irreducible", pseudo_value(&v));
            out.verify("pseudo-irreducibility", v.check(a)?);
        }
        Err(na) => out.output("pseudo_irreducible", na),
    }
    let neat = is_neat(a)?;
    out.output("neat", json!({ "value": neat.neat, "witness": witness_pair(&neat.witness) }));
    out.verify("neatness", neat.check(a)?);
    let adequate = is_adequate(a)?;
    out.output(
        "adequate",
        json!({ "value": adequate.adequate, "witness": adequate.witness.as_ref().map_or(Value::Null, el) }),
    );
    out.verify("adequacy", adequate.check(a)?);
    out.verify(
        "consistency",
        vec![("adequate implies neat", !adequate.adequate || neat.neat)],
    );
    let almost = is_almost_sr1(a)?;
    out.output("almost_sr1", almost_value(&almost));
    out.verify("almost stable range 1", almost.check(a)?);
    match part(quotient_descriptor_with_seed(a, ctx.seed))? {
        Ok(q) => {
            out.output("quotient", quotient_value(&q));
            out.verify("quotient", q.check(a)?);
        }
        Err(na) => out.output("quotient", na),
    }
    Ok(())
}
