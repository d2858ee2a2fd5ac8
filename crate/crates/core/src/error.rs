use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("undefined input: {0}")]
    UndefinedInput(String),
    #[error("valuation of the zero Laurent polynomial")]
    ValuationOfZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("face map would produce an empty hypersimplex: {0}")]
    EmptyFace(String),
    #[error("not a tropical point: {0}")]
    NotTropical(String),
    #[error("matrix is not in linearly general position: minor {subset:?} vanishes")]
    NotGeneral { subset: Vec<usize> },
    #[error("problem too large: {0}")]
    Scale(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no distinguishing octahedron found: {0}")]
    NoCertificate(String),
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
    #[error("no constrained descent from {stuck}")]
    NoDescent { stuck: String },
    #[error("linear programming failure: {0}")]
    Lp(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
