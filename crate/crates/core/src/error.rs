use thiserror::Error;

/// Errors raised by the library.
///
/// The variants fall into three classes which the CLI maps onto exit codes:
/// mathematical input errors (1), internal verification failures (2) and
/// usage errors (3).
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("reducible polynomial: {0}")]
    Reducible(String),
    #[error("cannot certify irreducibility of {0}")]
    CannotCertify(String),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("zero element")]
    ZeroElement,
    #[error("infinite quotient: free rank {0}")]
    InfiniteGroup(usize),
    #[error("ideal is not coprime to the modulus")]
    NotCoprime,
    #[error("{0} does not divide {1}")]
    NotDivisor(String, String),
    #[error("missing field data: {0}")]
    MissingData(String),
    #[error("invalid field data: {0}")]
    InvalidData(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("non-integral coordinate at index {0}")]
    NonIntegral(u64),
    #[error("invalid truncation set: {0}")]
    Truncation(String),
    #[error("vacuous: {0}")]
    Vacuous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("search ceiling reached: {0}")]
    Ceiling(String),
    #[error("internal verification failure: {0}")]
    Verification(String),
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Verification(_) => 2,
            Error::Usage(_) | Error::Parse(_) => 3,
            _ => 1,
        }
    }
}
