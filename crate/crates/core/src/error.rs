use alloc::string::String;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("denominator vanishes identically after substitution")]
    IdenticallyZeroDenominator,
    #[error("no exact polynomial quotient exists")]
    NotDivisible,
    #[error("pole order at the point cannot be resolved: {0}")]
    EssentialOrUndetermined(String),
    #[error("cone is not in the fan")]
    ConeNotInFan,
    #[error("shelling order is not a permutation of the maximal cones")]
    NotAPermutation,
    #[error("shelling cone s_{0} is not a cone of the fan")]
    DegenerateShelling(usize),
    #[error("unknown built-in space `{0}`")]
    UnknownSpace(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("degree {degree} has rank {rank} but {cells} cells")]
    RankMismatch { degree: usize, rank: usize, cells: usize },
    #[error("motivic Chern classes are only supported for projective spaces here")]
    UnsupportedSpace,
    #[error("basis is singular")]
    SingularBasis,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("result is not a polynomial: {0}")]
    NonPolynomialResult(String),
    #[error("not a Pieri triple: n must lie in I, J and K")]
    NotAPieriTriple,
    #[error("restriction is not a polynomial: {0}")]
    NotPolynomialAfterRestriction(String),
    #[error("equivariant constant is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("pole at the origin")]
    PoleAtOrigin,
    #[error("pole at z = 1")]
    PoleAtOne,
    #[error("instance exceeds the configured budget: {0}")]
    BudgetExceeded(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = core::result::Result<T, Error>;
