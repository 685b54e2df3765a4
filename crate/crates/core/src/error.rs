use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("a semigroup needs at least one element")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("table entry ({row},{col}) = {value} is out of range for order {order}")]
    IndexOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("associativity fails at ({i},{j},{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("unknown element {0:?}")]
    UnknownElement(String),
    #[error("element index {index} out of range for order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("size {size} exceeds the cap of {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("tuple algebra is not closed under the componentwise product")]
    NotClosed,
    #[error("tuple of length {got} in an algebra of arity {arity}")]
    ArityMismatch { arity: usize, got: usize },
    #[error("operation requires a commutative semigroup")]
    NotCommutative,
    #[error("operation requires a semilattice")]
    NotSemilattice,
    #[error("semilattice is trivial")]
    TrivialSemilattice,
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("period {period} exceeds the cap of {cap}")]
    PeriodCap { period: usize, cap: usize },
    #[error("the repeating block of a sequence must be non-empty")]
    EmptyPeriod,
    #[error("sequences are not strictly comparable")]
    NotStrictlyComparable,
    #[error("arity {given} is too small, at least {required} is needed")]
    ArityTooSmall { required: usize, given: usize },
    #[error("inadmissible M value {value}: {reason}")]
    InadmissibleM { value: usize, reason: String },
    #[error("nilpotency class {0:?} is not greater than 2")]
    ClassTooSmall(Option<usize>),
    #[error("isomorphism search exceeded its budget of {budget} nodes")]
    BudgetExceeded { budget: u64 },
    #[error("algebras live over different base semigroups")]
    CrossBase,
    #[error("root exponent {given} does not match |G|+1 = {expected}")]
    ExponentMismatch { expected: usize, given: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("parse error: {0}")]
    Parse(String),
}
