use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range")]
    NotPrime(u64),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("colon by the zero polynomial")]
    ZeroColon,

    #[error("resource limit exceeded: {what} > {limit}")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("iteration cap of {cap} reached in {what}")]
    IterationCap { what: &'static str, cap: usize },

    #[error("invalid setup: {0}")]
    Setup(String),

    #[error("ideal is not a member of the F-stable set: {0}")]
    NotMember(String),

    #[error("empty pool")]
    EmptyPool,

    #[error("colon chain did not stabilize within {emax} steps")]
    KuInconclusive { emax: usize, chain: Vec<Vec<String>> },

    #[error("colon chain is not ascending at step {step}")]
    KuNotAscending { step: usize },

    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}
