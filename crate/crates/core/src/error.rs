use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("expected {dim}x{dim} entries, got {len}")]
    EntryCount { dim: usize, len: usize },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix dimension {dim} is not {da}x{db}")]
    LocalDims { dim: usize, da: usize, db: usize },
    #[error("vector length {got}, expected {expected}")]
    LocalVectorLength { expected: usize, got: usize },
    #[error("vector norm {norm} is not 1")]
    NotNormalized { norm: f64 },
    #[error("zero vector")]
    ZeroVector,
    #[error("matrix is not hermitian (defect {defect:e})")]
    NotHermitian { defect: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps")]
    EigenNoConvergence { sweeps: usize },
    #[error("unsupported copy count {0}")]
    UnsupportedCopies(usize),
    #[error("not a density matrix: {0}")]
    NotAState(&'static str),
    #[error("mixing parameter {0} outside [0, 1]")]
    ParameterOutOfRange(f64),
    #[error("overlap {0} outside (0, 1]")]
    OverlapOutOfRange(f64),
    #[error("product vectors are linearly dependent")]
    RankDeficient,
    #[error("not a rank-2 x rank-2 product projector: {0}")]
    InvalidProjector(&'static str),
    #[error("operator must be positive semidefinite with spectrum in [0, 1] (found {0:e})")]
    NotContraction(f64),
    #[error("at least one restart is required")]
    NoRestarts,
    #[error("grid resolution {0} below minimum 8")]
    ResolutionTooSmall(usize),
    #[error("invalid sweep range: {0}")]
    InvalidRange(&'static str),
    #[error("reference vector is not an eigenvector (residual {0:e})")]
    NotEigenvector(f64),
    #[error("need at least 5 negative-witness records in window, found {0}")]
    InsufficientRecords(usize),
}
