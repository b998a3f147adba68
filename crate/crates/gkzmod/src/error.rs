//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("exponent length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("order is not a global monomial order")]
    NonGlobalOrder,

    #[error("matrix is rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("invalid problem specification: {0}")]
    InvalidSpec(String),

    #[error("non-generic weight: in_tau is not a monomial ideal; offending generator {0}")]
    NonGenericWeight(String),

    #[error("non-generic parameter: fake-exponent system for pair {pair} is {kind}")]
    NonGenericParameter { pair: String, kind: String },

    #[error("resonant exponent: zero denominator at lattice offset {0:?}")]
    ResonantExponent(Vec<i64>),

    #[error("indicial ideal contains a unit (T(M) empty via elimination route)")]
    UnitIndicialIdeal,

    #[error("series support is unbounded at bounded t-order (offset {0:?})")]
    UnboundedSeriesSupport(Vec<i64>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
