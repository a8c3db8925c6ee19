use thiserror::Error;

/// Errors raised by the exact-arithmetic and enumeration layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division is not exact: {dividend} / {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("expected a genuine polynomial but found exponent {exponent}")]
    NegativeExponent { exponent: i64 },

    #[error("two-row shape requires a >= b, got ({a}, {b})")]
    BadShape { a: u32, b: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("edge {edge} is not valid for family {family} with n = {n}")]
    InvalidEdge { family: String, n: u32, edge: String },

    #[error("multidissection contains crossing edges {0} and {1}")]
    Crossing(String, String),

    #[error("minor indices must satisfy i < j, got ({i}, {j})")]
    MinorOrientation { i: usize, j: usize },

    #[error("polynomial is not homogeneous in D-degree")]
    MixedDegree,

    #[error("fold rejected: {0}")]
    Fold(String),

    #[error("tableau columns ({0}) and ({1}) cross")]
    CrossingColumns(String, String),
}

pub type Result<T> = std::result::Result<T, Error>;
