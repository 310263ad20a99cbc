use crate::field::Rational;

/// Errors raised by the library. Variants line up with the domain conditions
/// each operation can reject.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("pole: denominator vanishes at kappa = {kappa}")]
    Pole { kappa: Rational },

    #[error("degenerate hypergeometric parameter: denominator Pochhammer vanishes at term {term}")]
    DegenerateParameter { term: usize },

    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range 1..={nvars}")]
    Index { index: usize, nvars: usize },

    #[error("divided difference needs distinct indices, got ({0}, {0})")]
    SameIndex(usize),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error(
        "even power {0} of the alternating polynomial is symmetric; only odd powers are supported"
    )]
    EvenPower(u32),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("label order: expected m >= n, got m = {m}, n = {n}")]
    Order { m: usize, n: usize },

    #[error("out of range: {0}")]
    Range(String),

    #[error("{modulus} divides {n}: no singular polynomial omega_(n,0) at kappa = -n/N")]
    Divisibility { n: usize, modulus: usize },

    #[error("gcd(N-1, n) = {gcd} is not below (N-1)/2 for N = {nvars}, n = {n}")]
    Gcd { n: usize, nvars: usize, gcd: usize },

    #[error("operation requires a specialized kappa")]
    GenericKappa,

    #[error("module rank refused for N = {0} (limit is 5 without the large flag)")]
    TooLarge(usize),

    #[error("certificate mismatch: {0}")]
    Certificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
