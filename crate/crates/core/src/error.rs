//! Crate-wide error type.

/// Errors produced by the toolkit.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A phase target coincides with a drive asymptote and can never be
    /// reached in finite time (rise to `omega_max` or fall to `omega_min`).
    #[error("unreachable phase target: {0}")]
    UnreachableTarget(String),

    /// The focusing initialization violates the minimum-SNR constraint, so
    /// the optimization problem has no feasible starting point.
    #[error(
        "infeasible scenario: user {user} at area grid point {point}: \
         min-area SNR {snr_db:.2} dB < threshold {thr_db:.2} dB"
    )]
    Infeasible {
        user: usize,
        point: usize,
        snr_db: f64,
        thr_db: f64,
    },

    /// A stability or memory budget cannot be met.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// Scenario configuration error, with the offending key path.
    #[error("config error at `{path}`: {msg}")]
    Config { path: String, msg: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
