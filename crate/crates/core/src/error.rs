use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),
    #[error("not an inversion sequence: entry {value} at position {position} (must be < {position})")]
    NotAnInversionSequence { position: usize, value: u32 },
    #[error("malformed pattern `{0}`")]
    MalformedPattern(String),
    #[error("malformed relation triple `{0}`")]
    MalformedTriple(String),
    #[error("unsupported relation triple {0} for the critical value")]
    UnsupportedTriple(String),
    #[error("sequence {0:?} violates the relation triple {1}")]
    ViolatesTriple(Vec<u32>, String),
    #[error("sequence {0:?} contains the pattern 021")]
    Contains021(Vec<u32>),
    #[error("empty object has no last entry")]
    EmptyObject,
    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),
    #[error("statistic `{stat}` is not defined on {universe}")]
    StatisticUniverse { stat: String, universe: &'static str },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
