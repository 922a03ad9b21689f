use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the toolkit.
///
/// Variants fall in two groups: malformed input (`Parse`, shape errors) and
/// violated preconditions of an operation. The CLI maps the former to exit
/// code 1 and the latter to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid interval: lower bound {lo} exceeds upper bound {hi}")]
    InvalidInterval { lo: String, hi: String },
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("malformed linear program: {0}")]
    MalformedProgram(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("no convergence after {0} iterations")]
    NoConvergence(usize),
    #[error("unsupported matrix class: {0}")]
    UnsupportedMatrixClass(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("precondition could not be verified: {0}")]
    PreconditionNotVerifiable(String),
    #[error("solution set is unbounded")]
    UnboundedSolutionSet,
    #[error("pivot {0} contains zero")]
    PivotContainsZero(usize),
    #[error("no initial enclosure available")]
    NoInitialEnclosure,
    #[error("matrix is not bidiagonal")]
    NotBidiagonal,
    #[error("diagonal entry {0} contains zero")]
    DiagonalContainsZero(usize),
    #[error("interval matrix is singular")]
    SingularIntervalMatrix,
    #[error("size guard exceeded: n = {n} > {max}")]
    SizeGuardExceeded { n: usize, max: usize },
    #[error("spectral radius bound rho(Delta) < 1 could not be proven")]
    SpectralRadiusNotProven,
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("interval matrix is not nonnegative")]
    NotNonnegative,
    #[error("interval matrix is not irreducible")]
    NotIrreducible,
    #[error("vector is not positive")]
    NotPositiveVector,
    #[error("an endpoint matrix is singular")]
    SingularEndpointMatrix,
}

impl Error {
    /// True for errors caused by malformed input rather than a violated contract.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidInterval { .. })
    }
}
