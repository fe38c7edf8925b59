use thiserror::Error;

/// Errors raised by the workbench operations.
///
/// Failing axioms are not errors: they are reported through
/// [`crate::report::Report`]. These variants cover broken preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: usize, found: usize },
    #[error("input is not a valid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("input is not a valid representation: {0}")]
    InvalidRepresentation(String),
    #[error("input is not a valid bialgebra: {0}")]
    InvalidBialgebra(String),
    #[error("symmetric part is not invariant: {0}")]
    NotInvariant(String),
    #[error("r-matrix is not factorizable: {0}")]
    NotFactorizable(String),
    #[error("weight must be nonzero")]
    ZeroWeight,
    #[error("operator is not Rota-Baxter: {0}")]
    NotRotaBaxter(String),
    #[error("a bilinear form is required")]
    MissingForm,
    #[error("data is not a quadratic Rota-Baxter structure: {0}")]
    NotQuadraticRB(String),
    #[error("compatibility of second derivatives fails: {0}")]
    VipViolated(String),
    #[error("algebra or coalgebra is not (co)commutative: {0}")]
    NotCommutative(String),
    #[error("{line}:{col}: {reason}")]
    Parse {
        line: usize,
        col: usize,
        reason: String,
    },
    #[error("{line}:{col}: index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        line: usize,
        col: usize,
        index: usize,
        dim: usize,
    },
    #[error("missing input: {0}")]
    MissingInput(String),
    #[error("cannot read input: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
