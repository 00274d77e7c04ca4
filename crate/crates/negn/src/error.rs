use thiserror::Error;

/// Errors produced by diagram construction, realization and exact algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {input:?}: {reason}")]
    InvalidPartition { input: String, reason: String },

    #[error("run decomposition of the empty diagram is undefined")]
    EmptyRuns,

    #[error("run counts differ: {rows} row runs vs {cols} column runs")]
    RunCountMismatch { rows: usize, cols: usize },

    #[error("run multiplicities must be positive")]
    ZeroRunMultiplicity,

    #[error("rank must be at least 1, got {0}")]
    InvalidRank(i64),

    #[error("rank must be at least 2, got {0}")]
    RankTooSmallForLabels(i64),

    #[error("{labels} labels do not fit rank {rank}: expected {expected}")]
    LabelCountMismatch {
        labels: usize,
        rank: i64,
        expected: i64,
    },

    #[error("rank {n} is below n_min = {n_min} for {rep}")]
    RankBelowMin { n: i64, n_min: i64, rep: String },

    #[error("evaluation at 0 of a Laurent polynomial with negative exponents")]
    PoleAtZero,

    #[error("duplicate interpolation node {0}")]
    DuplicateNode(i64),

    #[error("interpolation requires at least one point")]
    EmptyInterpolation,

    #[error(
        "dimension polynomial for {rep} exceeds the degree bound {bound}: found exponent {found}"
    )]
    DegreeBound { rep: String, bound: i64, found: i64 },

    #[error("invalid polynomial serialization: {0}")]
    InvalidPolyJson(String),
}

pub type Result<T> = std::result::Result<T, Error>;
