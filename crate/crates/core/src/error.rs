use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("presentation must declare at least one generator")]
    EmptyGenerators,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("generator index {index} out of range (presentation has {count})")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("element {index} out of range (table has {size})")]
    ElementOutOfRange { index: usize, size: usize },
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("undeclared generator `{name}` at {line}:{column}")]
    UndeclaredGenerator {
        name: String,
        line: usize,
        column: usize,
    },
    #[error("malformed expression: {0}")]
    MalformedExpression(String),
    #[error("invalid PD code: {0}")]
    InvalidPd(String),
    #[error("denominator q must be at least 2, got {0}")]
    InvalidDenominator(i64),
    #[error("p = {p} is divisible by q = {q}: trivial tangle is not part of this family")]
    TrivialTangle { p: i64, q: i64 },
    #[error("gcd(p, q) = gcd({p}, {q}) != 1")]
    NotCoprime { p: i64, q: i64 },
}

pub type Result<T> = std::result::Result<T, Error>;
