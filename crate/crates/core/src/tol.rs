//! Numerical thresholds shared across the crate.

/// Largest `|A[i][j] − conj(A[j][i])|` accepted as hermitian.
pub const HERMITIAN: f64 = 1e-12;

/// Norm deviation from 1 accepted for local and global unit vectors.
pub const NORMALIZATION: f64 = 1e-12;

/// Eigenvalues with magnitude at or below this count as zero in rank decisions.
pub const ZERO_EIGENVALUE: f64 = 1e-10;

/// Default threshold below which a projected partial-transpose eigenvalue
/// certifies distillability.
pub const WITNESS: f64 = 1e-10;

/// Trace deviation from 1 accepted for density matrices.
pub const UNIT_TRACE: f64 = 1e-10;

/// All-copies product-overlap bound for the UPB complement projector,
/// consumed as a certified constant.
pub const BETA_CERTIFIED: f64 = 0.99;
