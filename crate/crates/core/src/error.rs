use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid value: {0}")]
    Validation(String),
    #[error("period mismatch: {0} vs {1}")]
    MismatchedPeriod(usize, usize),
    #[error("window is not total")]
    NotTotal,
    #[error("position {0} is absent from the window")]
    AbsentPosition(usize),
    #[error("star operation is undefined here")]
    StarUndefined,
    #[error("stream is not a channel of the window")]
    NotAChannel,
    #[error("stream is not compatible with the window")]
    IncompatibleStream,
    #[error("stream is not contained in the window")]
    NotASubstream,
    #[error("rotation is not proper")]
    NotProper,
    #[error("tableau shapes do not match")]
    ShapeMismatch,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("entry {0} not found in tableau")]
    EntryNotFound(usize),
    #[error("nothing left to insert")]
    EmptyPending,
    #[error("sign insertion exceeded {0} steps")]
    CapExceeded(usize),
    #[error("target content is not dominated by the source content")]
    DominanceViolated,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
