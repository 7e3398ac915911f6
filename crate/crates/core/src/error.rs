use crate::rootsys::RootVector;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid root system {family}{rank}: {reason}")]
    InvalidRootSystem {
        family: String,
        rank: usize,
        reason: String,
    },
    #[error("reflection mirror is the zero vector")]
    ZeroMirror,
    #[error("{0} is not a root")]
    NotARoot(RootVector),
    #[error("root arguments must not be proportional: {0} and {1}")]
    ProportionalRoots(RootVector, RootVector),
    #[error("not a simple system: {0}")]
    InvalidSimpleSystem(String),
    #[error("{0}")]
    UnknownPair(String),
    #[error("catalog data error for {pair}: {reason}")]
    Grading { pair: String, reason: String },
    #[error("{pair}: no admissible ordering within {words} reflection words")]
    OrderingSearchExhausted { pair: String, words: usize },
    #[error("internal invariant breached: {0}")]
    Invariant(String),
    #[error("invalid relation request: {0}")]
    InvalidRelation(String),
    #[error("rank {rank} exceeds the exhaustive enumeration bound {bound}")]
    RankAboveBound { rank: usize, bound: usize },
    #[error("coefficient z_{index} = {value} is not strictly positive")]
    NonPositiveCoefficient { index: usize, value: String },
    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
