use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {p} must exceed the degree {d}")]
    CharTooSmall { p: u32, d: usize },
    #[error("the given elements are not an F-basis of the extension")]
    SingularBasis,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("operator degree {op} exceeds polynomial degree {poly}")]
    DegreeMismatch { op: usize, poly: usize },
    #[error("skew polynomial degree {deg} exceeds the maximum {max}")]
    DegreeTooHigh { deg: usize, max: usize },
    #[error("no vector within the decoding radius has this syndrome")]
    NotDecodable,
    #[error("decoding failed: {0}")]
    DecodingFailure(String),
    #[error("decoded word failed verification: {0}")]
    FailedVerification(String),
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("linear system has more than one solution")]
    AmbiguousSolution,
    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    TooLarge { needed: u128, budget: u128 },
    #[error("{0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("polynomial is not irreducible")]
    NotIrreducible,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotDecodable
            | Error::DecodingFailure(_)
            | Error::FailedVerification(_)
            | Error::Inconsistent
            | Error::AmbiguousSolution => 2,
            Error::TooLarge { .. } => 3,
            _ => 1,
        }
    }
}
