use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("the zero ring is not supported")]
    ZeroRing,
    #[error("element does not belong to ring {0}")]
    OwnerMismatch(String),
    #[error("ring {0} is not enumerable")]
    NotEnumerable(String),
    #[error("cannot combine an enumerable ring with a sampleable ring")]
    ModeMismatch,
    #[error("ideal membership is not decidable over {0}")]
    UndecidableMembership(String),
    #[error("ideal is not proper")]
    ImproperIdeal,
    #[error("size {size} exceeds cap {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("ideal is not prime")]
    NotPrimeIdeal,
    #[error("ideal does not square to zero")]
    SquareNotZero,
    #[error("generator must be nonzero")]
    ZeroGenerator,
    #[error("{0} is not a supported integral-domain handle")]
    NotADomainHandle(String),
}

pub type Result<T> = std::result::Result<T, Error>;
