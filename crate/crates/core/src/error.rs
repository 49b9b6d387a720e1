use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{what} out of range: {value} not in 1..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("cannot delete from a permutation of length 1")]
    Underflow,

    #[error("entry set is empty")]
    EmptySet,

    #[error("entries must be distinct")]
    NotDistinct,

    #[error("bad arguments: {0}")]
    BadArguments(String),

    #[error("{0} is not a parallel alternation")]
    NotAParallelAlternation(String),

    #[error("{0} is not simple")]
    NotSimple(String),

    #[error("length {n} too small (need at least {min})")]
    TooSmall { n: usize, min: usize },

    #[error("length {n} exceeds guard {guard}")]
    TooLarge { n: usize, guard: usize },
}
