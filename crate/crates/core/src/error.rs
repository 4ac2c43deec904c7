use thiserror::Error;

/// Errors raised by the ring, basis, lattice and oracle routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("alpha must be positive")]
    ZeroAlpha,
    #[error("group order {p}^{alpha} exceeds the supported range")]
    OrderTooLarge { p: u64, alpha: u32 },
    #[error("level {level} out of range (alpha = {alpha})")]
    LevelOutOfRange { level: u32, alpha: u32 },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("argument {value} out of range: {what}")]
    ArgumentOutOfRange { value: u64, what: &'static str },
    #[error("ring elements belong to different groups")]
    GroupMismatch,
    #[error("base {0} is invalid, must be at least 2")]
    InvalidBase(u64),
    #[error("dimension {dim} exceeds budget {budget}")]
    BudgetExceeded { dim: u64, budget: u64 },
    #[error("matrix entry {0} cannot be drawn as a bitmap cell")]
    NonBinaryEntry(String),
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
    #[error("digit identity failed for n = {n} in base {base}: terms sum to {sum}")]
    IdentityViolation { n: u64, base: u64, sum: u64 },
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
