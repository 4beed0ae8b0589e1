use std::fmt;

/// Errors raised by field construction, algebra, verification and the simulator.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("base field size {0} is too small (need q >= 3)")]
    BaseTooSmall(u64),
    #[error("base field size {0} is too large (need q < 65536)")]
    BaseTooLarge(u64),
    #[error("extension degree {0} is out of range (need 1 <= t <= {max})", max = crate::gf::MAX_DEGREE)]
    BadDegree(usize),
    #[error("field of size {q}^{t} exceeds the supported range")]
    FieldTooLarge { q: u64, t: usize },
    #[error("inversion of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("expected {expected} coordinates, got {got}")]
    CoordinateLength { expected: usize, got: usize },
    #[error("coordinate {value} is out of range for F_{q}")]
    CoordinateRange { value: u64, q: u64 },
    #[error("invalid field descriptor: {0}")]
    Descriptor(String),
    #[error("conjugation by zero")]
    ZeroConjugator,
    #[error("the zero polynomial has no such property")]
    ZeroPolynomial,
    #[error("row {0} of the generator matrix is zero")]
    ZeroRow(usize),
    #[error("matrix dimensions do not match: {0}")]
    Dimension(String),
    #[error("{what}: search space of {size} states exceeds the limit of {limit}")]
    Infeasible { what: &'static str, size: u128, limit: u128 },
    #[error("need n = {n} distinct elements of F_{q}")]
    NotEnoughLambdas { n: usize, q: u64 },
    #[error("invalid code parameters: {0}")]
    Parameters(String),
    #[error("precondition violated: {0}")]
    Precondition(Precondition),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("erasure pattern is not recoverable")]
    Unrecoverable,
    #[error("received symbols are inconsistent with every codeword")]
    Inconsistent,
    #[error("invalid erasure pattern: {0}")]
    Pattern(String),
    #[error("malformed input: {0}")]
    Schema(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Hypotheses that must hold before an MDP verdict means anything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Precondition {
    NotMinimal,
    NonGenericRowDegrees(Vec<usize>),
    SingularLeadingBlock,
    RateAtLeastHalf { n: usize, k: usize },
}

impl fmt::Display for Precondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Precondition::NotMinimal => write!(f, "generator matrix is not minimal"),
            Precondition::NonGenericRowDegrees(d) => {
                write!(f, "row degrees {d:?} are not all in {{m, m-1}}")
            }
            Precondition::SingularLeadingBlock => write!(f, "G0 does not have full row rank"),
            Precondition::RateAtLeastHalf { n, k } => {
                write!(f, "n = {n} <= 2k = {}: MDP construction hypothesis n > 2k not met", 2 * k)
            }
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
