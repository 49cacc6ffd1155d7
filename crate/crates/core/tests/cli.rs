mod common;

use serde_json::Value;

use common::run_cli;

fn doc(args: &[&str]) -> (i32, Value) {
    let (code, out) = run_cli(args);
    let text = String::from_utf8(out).expect("utf-8 output");
    (code, serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}")))
}

fn all_pass(v: &Value) -> bool {
    let checks = v["verification"].as_array().expect("verification array");
    !checks.is_empty() && checks.iter().all(|c| c["status"] == "pass")
}

#[test]
fn success_documents_verify() {
    let cases: &[&[&str]] = &[
        &["--ring", "H", "gcd", "2 + 1/2*x", "6*x^2"],
        &["--ring", "Qx", "gcd", "3/4*x^2 - x", "x"],
        &["--ring", "Z", "classify", "360"],
        &["--ring", "Qx", "classify", "x^2 + 1"],
        &["--ring", "Z", "factor", "12", "18", "35"],
        &["--ring", "H", "factor", "-60 + x"],
        &["--ring", "Qx", "factor", "x^2 - 1", "x^2 + x"],
        &["--ring", "Z", "neat", "12", "2", "3"],
        &["--ring", "H", "neat", "12"],
        &["--ring", "Qx", "adequate", "x^3 + x^2", "x"],
        &["--ring", "H", "adequate", "12", "2"],
        &["--ring", "Z", "sr1", "7", "3"],
        &["--ring", "Qx", "sr1", "x^2 + x + 1", "x"],
        &["--ring", "H", "sr2", "x", "3", "5"],
        &["--ring", "Z", "snf", "[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]"],
        &["--ring", "Qx", "snf", "x, 1; 0, x"],
        &["--ring", "H", "quotient", "12"],
        &["--ring", "Qx", "quotient", "x^2 - 2*x + 1"],
        &["--ring", "Z", "find", "nonunit-neat"],
        &["--ring", "Qx", "find", "local-quotient"],
        &["--ring", "H", "--prec", "32", "snf", "x, 2; 4*x, 3"],
    ];
    for args in cases {
        let (code, v) = doc(args);
        assert_eq!(code, 0, "{args:?}: {v}");
        assert!(all_pass(&v), "{args:?}: {v}");
        assert!(v["error"].is_null());
        assert_eq!(v["schema"], "bezout-certificate/1");
    }
}

#[test]
fn mathematical_negatives_exit_one() {
    for args in [
        &["--ring", "H", "sr1", "3", "5"][..],
        &["--ring", "Z", "sr1", "3", "5"],
        &["--ring", "H", "neat", "x"],
        &["--ring", "H", "adequate", "x"],
        &["--ring", "H", "adequate", "x", "2"],
        &["--ring", "H", "neat", "x", "3", "5"],
        &["--ring", "Z", "sr2", "2", "4", "6"],
    ] {
        let (code, v) = doc(args);
        assert_eq!(code, 1, "{args:?}: {v}");
        assert!(!v["error"].is_null(), "{args:?}");
    }
    let (_, v) = doc(&["--ring", "H", "neat", "x"]);
    assert_eq!(v["outputs"]["witness"], serde_json::json!(["3", "5"]));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let (code, v) = doc(&["--ring", "H", "gcd", "2 +", "3"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "ParseError");
    assert!(v["error"]["position"].is_u64());

    let (code, v) = doc(&["--ring", "Z", "--prec", "8", "gcd", "1", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "PrecisionFlagInvalid");

    let (code, v) = doc(&["gcd", "1", "2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "Usage");

    let (code, v) = doc(&["--ring", "Z", "find", "bogus"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "ParseError");

    let (code, _) = run_cli(&["--ring", "Z", "nosuchcommand"]);
    assert_eq!(code, 2);
}

#[test]
fn resource_bounds_and_size_limits() {
    // product of two primes above the trial-division bound
    let (code, v) = doc(&["--ring", "Z", "factor", "1000036000099"]);
    assert_eq!(code, 3, "{v}");
    assert_eq!(v["error"]["kind"], "FactorizationBoundExceeded");

    let (code, v) = doc(&["--ring", "Z", "snf", "1,0,0,0,0,0;0,1,0,0,0,0;0,0,1,0,0,0;0,0,0,1,0,0;0,0,0,0,1,0;0,0,0,0,0,1"]);
    assert_eq!(code, 0, "{v}");
    assert!(v["outputs"].get("determinantal_divisors").is_none());
}

#[test]
fn headline_examples() {
    let (code, v) = doc(&["--ring", "H", "classify", "x"]);
    assert_eq!(code, 0);
    let o = &v["outputs"];
    assert_eq!(o["pseudo_irreducible"]["value"], true);
    assert_eq!(o["neat"]["value"], false);
    assert_eq!(o["neat"]["witness"], serde_json::json!(["3", "5"]));
    assert_eq!(o["adequate"]["value"], false);
    assert_eq!(o["almost_sr1"]["value"], false);

    let (code, v) = doc(&["--ring", "H", "snf", "x,0;2,3"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["diagonal"], serde_json::json!(["1", "3*x"]));
    assert!(all_pass(&v));
}

#[test]
fn seed_and_precision_are_echoed() {
    let (_, a) = doc(&["--ring", "H", "--seed", "7", "quotient", "8"]);
    assert_eq!(a["seed"], 7);
    assert_eq!(a["precision"], 16);
    let (_, b) = doc(&["--ring", "H", "--prec", "32", "quotient", "8"]);
    assert_eq!(b["precision"], 32);
    let (_, z) = doc(&["--ring", "Z", "quotient", "8"]);
    assert!(z["precision"].is_null());
}
