use thiserror::Error;

/// Every failure the library can report.
///
/// Witness payloads are carried as rendered element strings so the error type
/// stays independent of the ring instance that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("trial division bound {bound} exceeded while factoring {n}")]
    FactorizationBoundExceeded { n: String, bound: u64 },
    #[error("operation `{op}` is not supported over {ring}")]
    UnsupportedRing { ring: &'static str, op: &'static str },
    #[error("{a} is not neat: no decomposition against ({b}, {c})")]
    NotNeat { a: String, b: String, c: String },
    #[error("{a} is not adequate relative to {b}")]
    NotAdequate { a: String, b: String },
    #[error("elements ({0}) do not generate the unit ideal")]
    NotUnimodular(String),
    #[error("{0} is zero or a unit")]
    NotANonzeroNonunit(String),
    #[error("bounded search exhausted: {0}")]
    SearchExhausted(String),
    #[error("no coprime basis exists: {a} and {b} keep sharing a nonunit factor")]
    CoprimeBasisUnavailable { a: String, b: String },
    #[error("matrix of size {rows}x{cols} exceeds the limit {limit}x{limit}")]
    MatrixTooLarge { rows: usize, cols: usize, limit: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("a precision (flag or `@N` suffix) is only valid for the Henriksen ring")]
    PrecisionFlagInvalid,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
