use thiserror::Error;

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {n} is out of range for a table with n_max = {n_max}")]
    IndexOutOfRange { n: usize, n_max: usize },

    #[error("probability {0} lies outside [0, 1]")]
    NotAProbability(String),

    #[error("a pile of 0 elements is not a playable game")]
    EmptyPile,

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("wins ({wins}) exceed trials ({trials})")]
    WinsExceedTrials { wins: u64, trials: u64 },

    #[error("unsupported confidence level {0}; expected one of 0.90, 0.95, 0.99, 0.999")]
    UnsupportedCiLevel(f64),

    #[error("pile size {n} exceeds the oracle depth limit {limit}")]
    DepthLimit { n: usize, limit: usize },

    #[error("branch weights at pile {pile} sum to {sum}, not 1")]
    BranchWeightLeak { pile: usize, sum: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
