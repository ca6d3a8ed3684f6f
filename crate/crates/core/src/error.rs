use qlinalg::LinalgError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("structure constants are not antisymmetric at ({i},{j},{k})")]
    NotAntisymmetric { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple ({i},{j},{k})")]
    JacobiViolation { i: usize, j: usize, k: usize },
    #[error("matrix realization is inconsistent: {0}")]
    BadRealization(String),
    #[error("element has {found} coordinates, algebra has dimension {expected}")]
    AlgebraMismatch { expected: usize, found: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("bracket not preserved on basis pair ({0}, {1})")]
    BracketNotPreserved(String, String),
    #[error("map is not an involution")]
    NotInvolutive,
    #[error("involutions do not commute")]
    NotCommuting,
    #[error("algebra is not semisimple")]
    NotSemisimple,
    #[error("algebra is not simple")]
    NotSimple,
    #[error("centroid splitting needs irrational scalars")]
    IrrationalSplit,
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("not a Cartan involution")]
    NotCartan,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = CoreError> = std::result::Result<T, E>;
