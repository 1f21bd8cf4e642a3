use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be an odd prime, got {0}")]
    NotOddPrime(u64),

    #[error("p must divide order (p = {p}, order = {order})")]
    CharDoesNotDivideOrder { p: u64, order: u64 },

    #[error("group order must be positive")]
    ZeroOrder,

    #[error("inverse of zero in F_{0}")]
    ZeroInverse(u32),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("operands belong to different contexts")]
    ContextMismatch,

    #[error("slot {slot} out of range for a degree-{degree} cochain")]
    SlotOutOfRange { slot: usize, degree: usize },

    #[error("a(..) needs a non-empty index tuple")]
    EmptyTuple,

    #[error("{what} requires degree at least {min}, got {degree}")]
    DegreeTooLow {
        what: &'static str,
        min: usize,
        degree: usize,
    },

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("resource guard: {entries} entries requested, limit is {limit}")]
    ResourceGuard { entries: u128, limit: u128 },

    #[error("{0} requires odd-degree operands")]
    EvenDegreeOperand(&'static str),
}
