use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input: bad file, out-of-range vertex id, uniformity
    /// mismatch, invalid probability and the like.
    #[error("input error: {0}")]
    Input(String),

    /// A stated precondition of an operation does not hold for the given
    /// arguments (e.g. `m(G) <= k` for the degeneracy ordering, or "B is an
    /// F-block" for grow sequences).
    #[error("contract violation: {0}")]
    Contract(String),

    /// The operation is not defined for these parameters (e.g. the link of
    /// a 2-graph).
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// An exhaustive search ran out of its configured budget without
    /// reaching a decision. Never a guess.
    #[error("undecided: {0}")]
    Undecided(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
