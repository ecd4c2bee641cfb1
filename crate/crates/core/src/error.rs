use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("polynomial arity mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
}

/// Rejections when building an arrangement. Form indices are zero-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error("form {index} has {found} coefficients, expected {expected}")]
    WrongLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("form {index} is identically zero")]
    ZeroForm { index: usize },
    #[error("forms {first} and {second} are proportional")]
    ProportionalPair { first: usize, second: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("fraction lies outside the filtration cell R^{p}_{q}")]
    NotInCell { p: usize, q: usize },
    #[error("basis classes are not independent modulo the lower filtration (rank {rank} of {len})")]
    BasisNotIndependent { rank: usize, len: usize },
    #[error("denominator does not factor into forms of the arrangement")]
    FactorOverDelta,
    #[error("fraction has numerator degree {degree} and {factors} denominator factors, outside R^{p}_{q}")]
    OutsideCellBounds {
        degree: usize,
        factors: usize,
        p: usize,
        q: usize,
    },
    #[error("polynomial has {found} variables, arrangement has {expected}")]
    Arity { expected: usize, found: usize },
}
