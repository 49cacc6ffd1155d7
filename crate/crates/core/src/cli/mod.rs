//! Command-line front end: parses elements, runs one operation and prints a
//! JSON certificate document.
//!
//! Exit codes: 0 success, 1 mathematical negative (with witness), 2 usage or
//! parse error, 3 resource bound (factorization bound, precision, search
//! limits).

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::instances::{HSeries, Instance, Poly, DEFAULT_PRECISION};
use crate::numbers::Int;
use crate::ring::RingKind;

pub const SCHEMA: &str = "bezout-certificate/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RingArg {
    #[value(name = "Z")]
    Z,
    #[value(name = "Qx")]
    Qx,
    #[value(name = "H")]
    H,
}

#[derive(Debug, Parser)]
#[command(name = "bezout", version, about = "Exact gcd certificates, element classes and Smith forms over Z, Q[x] and Z + xQ[[x]]")]
pub struct Cli {
    /// Ring: Z, Qx or H (required).
    #[arg(long, global = true, value_enum)]
    pub ring: Option<RingArg>,
    /// Working precision for H (default 16); rejected for other rings.
    #[arg(long, global = true)]
    pub prec: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Extended gcd certificate of two elements.
    Gcd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Pseudo-irreducibility, neatness, adequacy, almost stable range 1 and
    /// quotient structure of one element.
    Classify {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Complete comaximal factorization of one element (Z, H), or a coprime
    /// basis of several elements (any ring).
    Factor {
        #[arg(required = true, allow_hyphen_values = true)]
        elems: Vec<String>,
    },
    /// Neat decomposition of A against the comaximal pair (B, C), or the
    /// neatness verdict of A alone.
    Neat {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true, requires = "c")]
        b: Option<String>,
        #[arg(allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Adequate decomposition of A against B, or the adequacy verdict of A.
    Adequate {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Decides whether a + b*t is a unit for some t.
    Sr1 {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Reduces the unimodular triple (a, b, c) to a unimodular pair.
    Sr2 {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        c: String,
    },
    /// Smith normal form with transformation matrices.
    Snf {
        /// Rows separated by `;`, entries by `,`, or a JSON array of arrays.
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Structure of the quotient ring R/aR.
    Quotient {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// First nonunit of the given kind in the ring's enumeration order.
    Find {
        /// local-quotient, nonunit-adequate or nonunit-neat
        kind: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gcd { .. } => "gcd",
            Command::Classify { .. } => "classify",
            Command::Factor { .. } => "factor",
            Command::Neat { .. } => "neat",
            Command::Adequate { .. } => "adequate",
            Command::Sr1 { .. } => "sr1",
            Command::Sr2 { .. } => "sr2",
            Command::Snf { .. } => "snf",
            Command::Quotient { .. } => "quotient",
            Command::Find { .. } => "find",
        }
    }
}

/// Settings shared by every operation.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub precision: usize,
    pub seed: u64,
}

/// What an operation produced before the document is assembled.
pub(crate) struct Outcome {
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub checks: Vec<(String, bool)>,
    /// Set for a mathematical negative; the outputs then hold the witness.
    pub negative: Option<Value>,
}

impl Outcome {
    pub(crate) fn new() -> Self {
        Outcome {
            inputs: Map::new(),
            outputs: Map::new(),
            checks: Vec::new(),
            negative: None,
        }
    }

    pub(crate) fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_owned(), value.into());
    }

    pub(crate) fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_owned(), value.into());
    }

    pub(crate) fn verify(&mut self, section: &str, report: Vec<(&'static str, bool)>) {
        self.checks
            .extend(report.into_iter().map(|(name, ok)| (format!("{section}: {name}"), ok)));
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotDivisible { .. }
        | Error::NotAUnit(_)
        | Error::NotNeat { .. }
        | Error::NotAdequate { .. }
        | Error::NotUnimodular(_)
        | Error::NotANonzeroNonunit(_)
        | Error::CoprimeBasisUnavailable { .. } => 1,
        Error::ZeroDenominator
        | Error::DivisionByZero
        | Error::UnsupportedRing { .. }
        | Error::DimensionMismatch(_)
        | Error::Parse { .. }
        | Error::PrecisionFlagInvalid => 2,
        Error::PrecisionExhausted(_)
        | Error::FactorizationBoundExceeded { .. }
        | Error::SearchExhausted(_)
        | Error::MatrixTooLarge { .. } => 3,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::ZeroDenominator => "ZeroDenominator",
        Error::DivisionByZero => "DivisionByZero",
        Error::NotDivisible { .. } => "NotDivisible",
        Error::NotAUnit(_) => "NotAUnit",
        Error::PrecisionExhausted(_) => "PrecisionExhausted",
        Error::FactorizationBoundExceeded { .. } => "FactorizationBoundExceeded",
        Error::UnsupportedRing { .. } => "UnsupportedRing",
        Error::NotNeat { .. } => "NotNeat",
        Error::NotAdequate { .. } => "NotAdequate",
        Error::NotUnimodular(_) => "NotUnimodular",
        Error::NotANonzeroNonunit(_) => "NotANonzeroNonunit",
        Error::SearchExhausted(_) => "SearchExhausted",
        Error::CoprimeBasisUnavailable { .. } => "CoprimeBasisUnavailable",
        Error::MatrixTooLarge { .. } => "MatrixTooLarge",
        Error::DimensionMismatch(_) => "DimensionMismatch",
        Error::Parse { .. } => "ParseError",
        Error::PrecisionFlagInvalid => "PrecisionFlagInvalid",
    }
}

pub(crate) fn error_value(err: &Error) -> Value {
    let mut v = json!({ "kind": error_kind(err), "message": err.to_string() });
    if let Error::Parse { pos, .. } = err {
        v["position"] = json!(pos);
    }
    v
}

fn run_in<R: Instance>(cmd: &Command, ctx: Context) -> Result<Outcome, Error> {
    commands::run::<R>(cmd, ctx)
}

/// Runs a parsed command; returns the exit code and the JSON document.
pub fn execute(cli: &Cli) -> (i32, String) {
    let op = cli.command.name();
    let ring = match cli.ring {
        Some(r) => r,
        None => {
            return (2, usage_document(op, None, "the --ring flag is required (Z, Qx or H)"));
        }
    };
    let kind = match ring {
        RingArg::Z => RingKind::Integers,
        RingArg::Qx => RingKind::RationalPolynomials,
        RingArg::H => RingKind::Henriksen,
    };
    if cli.prec.is_some() && ring != RingArg::H {
        return document(op, kind, None, cli.seed, Err(Error::PrecisionFlagInvalid));
    }
    let precision = cli.prec.unwrap_or(DEFAULT_PRECISION);
    if precision == 0 {
        return (2, usage_document(op, Some(kind), "--prec must be at least 1"));
    }
    let ctx = Context {
        precision,
        seed: cli.seed,
    };
    let result = match ring {
        RingArg::Z => run_in::<Int>(&cli.command, ctx),
        RingArg::Qx => run_in::<Poly>(&cli.command, ctx),
        RingArg::H => run_in::<HSeries>(&cli.command, ctx),
    };
    let shown_precision = (ring == RingArg::H).then_some(precision);
    document(op, kind, shown_precision, cli.seed, result)
}

fn usage_document(op: &str, ring: Option<RingKind>, message: &str) -> String {
    let doc = json!({
        "schema": SCHEMA,
        "operation": op,
        "ring": ring.map(RingKind::name),
        "precision": Value::Null,
        "seed": Value::Null,
        "inputs": {},
        "outputs": {},
        "verification": [],
        "error": { "kind": "Usage", "message": message },
        "exit_code": 2,
    });
    render(&doc)
}

fn document(
    op: &str,
    ring: RingKind,
    precision: Option<usize>,
    seed: u64,
    result: Result<Outcome, Error>,
) -> (i32, String) {
    let (code, inputs, outputs, checks, error) = match result {
        Err(e) => (exit_code(&e), Map::new(), Map::new(), Vec::new(), error_value(&e)),
        Ok(outcome) => {
            let failed = outcome.checks.iter().any(|(_, ok)| !ok);
            let (code, error) = if failed {
                (
                    1,
                    json!({ "kind": "VerificationFailed", "message": "a listed identity does not hold" }),
                )
            } else if let Some(neg) = outcome.negative {
                (1, neg)
            } else if outcome.checks.is_empty() {
                (1, json!({ "kind": "VerificationFailed", "message": "no identity was checked" }))
            } else {
                (0, Value::Null)
            };
            (code, outcome.inputs, outcome.outputs, outcome.checks, error)
        }
    };
    let verification: Vec<Value> = checks
        .into_iter()
        .map(|(identity, ok)| json!({ "identity": identity, "status": if ok { "pass" } else { "fail" } }))
        .collect();
    let doc = json!({
        "schema": SCHEMA,
        "operation": op,
        "ring": ring.name(),
        "precision": precision,
        "seed": seed,
        "inputs": inputs,
        "outputs": outputs,
        "verification": verification,
        "error": error,
        "exit_code": code,
    });
    (code, render(&doc))
}

fn render(doc: &Value) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("JSON values always serialize");
    s.push('\n');
    s
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            (code, e.to_string())
        }
    }
}

/// Process entry point.
pub fn main() -> i32 {
    let (code, text) = run(std::env::args_os());
    if code == 2 && !text.starts_with('{') {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    code
}
