use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite value")]
    NonFinite,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("map degree n={n} must be at least 2 and exceed deg q = {q_degree}")]
    DegreeTooLow { n: u32, q_degree: usize },
    #[error("polynomial degree {0} is below the minimum for this operation")]
    PolyDegreeTooLow(usize),
    #[error("root iteration did not converge for roots {0:?}")]
    NoConvergence(Vec<usize>),
    #[error("no roots in the annulus")]
    EmptyAnnulus,
    #[error("no periodic cycle found")]
    NoCycleFound,
    #[error("Newton refinement diverged")]
    NewtonDivergence,
    #[error("distance transform needs at least one source")]
    EmptySource,
    #[error("set is empty")]
    EmptySet,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// Whether this is a numerical failure rather than a caller mistake.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NonFinite
                | Error::NoConvergence(_)
                | Error::EmptyAnnulus
                | Error::NoCycleFound
                | Error::NewtonDivergence
                | Error::EmptySource
                | Error::EmptySet
        )
    }
}
