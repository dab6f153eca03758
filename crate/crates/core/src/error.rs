use thiserror::Error;

/// Errors raised by the algebraic and analytic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("determinant is not identically 1")]
    DetNotOne,
    #[error("projection direction is the zero vector")]
    ZeroDirection,
    #[error("elementary factor polynomial must be non-zero with vanishing constant term")]
    InvalidFactor,
    #[error("consecutive factors {0} and {1} share a projection")]
    RepeatedProjection(usize, usize),
    #[error("JP chain must contain at least one projection")]
    EmptyChain,
    #[error("matrix polynomial has degree zero")]
    DegreeZero,
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("matrix is non-singular")]
    NonSingular,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("cannot evaluate at infinity")]
    InfiniteArgument,
    #[error("argument must lie in the open upper half plane")]
    ArgumentNotInUpperHalfPlane,
    #[error("factorization has a non-identity constant prefix")]
    NonIdentityPrefix,
    #[error("factorization is not a transfer matrix")]
    NotATransferMatrix,
    #[error("function is identically infinite")]
    IdenticallyInfinite,
    #[error("rational function has non-real coefficients")]
    NonRealCoefficients,
    #[error("0/0 is not a rational function")]
    Indeterminate,
    #[error("invalid sampling grid: {0}")]
    InvalidGrid(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
