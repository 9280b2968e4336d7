use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Leading coefficient of a series to be inverted is not a unit in Z.
    #[error("leading coefficient {0} is not +1 or -1")]
    NonUnitLeading(String),
    /// A Pochhammer factor (1 - q^e) with e <= 0 would vanish or diverge.
    #[error("pochhammer argument exponent {0} must be positive")]
    ZeroFactor(String),
    #[error("argument out of domain: {0}")]
    DomainError(String),
    /// Half-integer theta component indices with inconsistent parities.
    #[error("theta component grid mismatch: 2m = {twice_m}, 2a = {twice_a}")]
    GridMismatch { twice_m: i64, twice_a: i64 },
    /// Exhaustive enumeration would exceed the configured cap.
    #[error("enumeration cap exceeded: estimated {estimate} objects > cap {cap}")]
    CapExceeded { estimate: u64, cap: u64 },
    /// A generating-function route produced fractional q-exponents where the
    /// integer lattice is required; indicates an implementation bug.
    #[error("fractional exponents survived cancellation: {0}")]
    LatticeError(String),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
