use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operation is undefined on the empty permutation")]
    EmptyPermutation,

    #[error("word is not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("word has a repeated entry {0}")]
    RepeatedEntry(u32),

    #[error("n = {n} exceeds the enumeration limit {limit} (set BALLOTLAB_ENUM_LIMIT to raise it)")]
    EnumerationLimit { n: usize, limit: usize },

    #[error("unknown statistic `{0}`")]
    UnknownStatistic(String),

    #[error("empty cycle")]
    EmptyCycle,

    #[error("invalid split pair: {0}")]
    InvalidSplit(String),

    #[error("domain violation: {0}")]
    Domain(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("constant term {0} is not the square of a rational")]
    NonSquareConstant(String),

    #[error("series has nonzero constant term {0}")]
    NonzeroConstant(String),

    #[error("truncation box too small: {0}")]
    BoxTooSmall(String),

    #[error("reflect_t precondition violated at exponent {0:?}")]
    ReflectDomain([u32; 4]),

    #[error("coefficient {0} scaled by e_x! is not an integer")]
    NonIntegral(String),

    #[error("exponent {0:?} lies outside the truncation box")]
    OutsideBox([u32; 4]),

    #[error("unknown builder `{0}`")]
    UnknownBuilder(String),

    #[error("b-file parse error on line {line}: {msg}")]
    BFileParse { line: usize, msg: String },

    #[error("offset mismatch: {0}")]
    OffsetMismatch(String),
}
