use thiserror::Error;

/// Every failure the library reports. Candidates and positions in messages
/// are 1-based, matching the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected n = {expected}, found n = {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a permutation of 1..={n}: {detail}")]
    NotAPermutation { n: usize, detail: String },
    #[error("candidate {candidate} is out of range 1..={n}")]
    CandidateOutOfRange { candidate: usize, n: usize },
    #[error("menu must contain at least one candidate")]
    EmptyMenu,
    #[error("n = {n} exceeds the {what} guard (n <= {limit})")]
    Guard { what: &'static str, n: usize, limit: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("invalid window: need b <= t < n (0-based positions), got b = {b}, t = {t}, n = {n}")]
    InvalidWindow { b: usize, t: usize, n: usize },
    #[error("value {0} is not representable in the chosen scalar type")]
    Unrepresentable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
