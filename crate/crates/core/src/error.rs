use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system {letter}{rank}: {reason}")]
    InvalidFamily {
        letter: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("cannot parse root system type {0:?}")]
    Parse(String),
    #[error("index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("operation requires a nonempty index set")]
    EmptyIndexSet,
    #[error("vector is not a root of this system")]
    NotARoot,
    #[error("roots are proportional")]
    ProportionalRoots,
    #[error("root system is simply laced; it has no short roots")]
    SimplyLaced,
    #[error("{what} exceeds the configured limit of {limit}")]
    LimitExceeded { what: &'static str, limit: usize },
    #[error("rank {rank} exceeds the configured bound {bound}")]
    RankBound { rank: usize, bound: usize },
    #[error("point set spans an affine space of dimension {found}, expected {expected}")]
    Degenerate { expected: usize, found: usize },
    #[error("diagram is not of finite type: {0}")]
    Unclassifiable(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
