use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("no modulus for GF({p}^{f}) in the embedded table")]
    UnknownModulus { p: u32, f: u32 },
    #[error("zero has no inverse")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("GF({q0}) is not a subfield of GF({q})")]
    NotASubfield { q0: u32, q: u32 },
    #[error("expected characteristic {expected}, got {got}")]
    WrongCharacteristic { expected: u32, got: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("form is degenerate")]
    DegenerateForm,
    #[error("odd dimension {0} where an even one is required")]
    OddDimension(usize),
    #[error("matrix is not an isometry of the form")]
    NotAnIsometry,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("order mismatch for {label}: expected {expected}, computed {computed}")]
    OrderMismatch { label: String, expected: String, computed: String },
    #[error("parity map is not a homomorphism")]
    NotAHomomorphism,
    #[error("point is not in the universe")]
    PointNotInUniverse,
    #[error("data integrity: {0}")]
    DataIntegrity(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("constraint violated: {0}")]
    ConstraintViolation(String),
    #[error("strategy precondition failed: {0}")]
    StrategyPrecondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
