use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid plumbing graph: {0}")]
    InvalidGraph(String),

    #[error("not an integral homology sphere: det A = {det}")]
    NotHomologySphere { det: String },

    #[error("GF(2) solve failed: {0}")]
    SolveFailure(String),

    #[error("{what} = {value} is not divisible by 8")]
    NonDivisibleBy8 { what: &'static str, value: String },

    #[error("invalid Seifert data {invariants:?}: {reason}")]
    InvalidSeifertData { invariants: Vec<u64>, reason: String },

    #[error("split index {index} out of range 2..={max} for {len} Seifert invariants")]
    IndexOutOfRange { index: usize, max: usize, len: usize },

    #[error("malformed splice tree: {0}")]
    MalformedSplice(String),

    #[error("R-invariant rounding unstable: value {value}, residual {residual:e} >= {tolerance:e}")]
    RoundingUnstable { value: f64, residual: f64, tolerance: f64 },

    #[error("form is not even")]
    NotEven,

    #[error("form is definite; rank and signature do not classify it")]
    Definite,

    #[error("form is not unimodular: det = {0}")]
    NotUnimodular(String),

    #[error("10/8 check is vacuous for signature zero")]
    ZeroSignature,

    #[error("rank formula does not give a nonnegative integer: {0}")]
    NonIntegralRank(String),

    #[error("rank vector is not 4-periodic")]
    NotFourPeriodic,

    #[error("nu = {0} is not an integer")]
    NonIntegralNu(String),

    #[error("unknown check suite `{0}`")]
    UnknownSuite(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
