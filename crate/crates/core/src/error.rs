use thiserror::Error;

use crate::exact::Domain;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation requires {expected}, got coefficients in {found}")]
    WrongDomain { expected: &'static str, found: Domain },

    #[error("coefficient domains differ: {0} vs {1}")]
    DomainMismatch(Domain, Domain),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} ({requested}) exceeds the configured cap of {limit}")]
    ResourceCap {
        what: &'static str,
        requested: u128,
        limit: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("no image given for generator x{0}")]
    MissingImage(u32),

    #[error("generator x{index} is out of range for {letters} letters")]
    GeneratorOutOfRange { index: u32, letters: u32 },

    #[error("variable x{0} has no assigned value")]
    UnassignedVariable(u32),

    #[error("polynomial is not multilinear: {0}")]
    NotMultilinear(String),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("unsupported coefficient domain: {0}")]
    UnsupportedDomain(String),

    #[error("generator images do not define a homomorphism of the group")]
    NotAHomomorphism,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn cap(what: &'static str, requested: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::ResourceCap {
            what,
            requested: requested.into(),
            limit: limit.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::ResourceCap { .. })
    }
}
