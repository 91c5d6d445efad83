use thiserror::Error;

/// Errors shared across field construction, linear algebra, and the solvers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("defining polynomial is not irreducible over GF({0})")]
    NotIrreducible(u64),
    #[error("operands belong to different field contexts")]
    CtxMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("degree constraint violated: {0}")]
    DegreeMismatch(String),
    #[error("no embedding: fields must share p and the source degree must divide the destination degree")]
    IncompatibleDegrees,
    #[error("source modulus has no root in the destination field")]
    NoRootFound,
    #[error("element is not a square in the requested subfield")]
    NonResidue,
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("parameter a must be nonzero")]
    AZero,
    #[error("F(a) = 0: this instance has p^d+1 roots, use the many-roots solver")]
    CasePd1,
    #[error("F(a) != 0: this instance does not have p^d+1 roots")]
    NotPd1Case,
    #[error("construction requires F(a) = 0")]
    FmNonzero,
    #[error("u lies in the excluded subfield and parametrizes nothing")]
    UInSmallField,
    #[error("candidate scan exhausted without producing a kernel element")]
    PipelineExhausted,
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
