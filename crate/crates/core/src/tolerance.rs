//! Numerical tolerances used across the library.
//!
//! Every comparison threshold lives here so that library code and tests
//! agree on a single set of constants.

/// Maximum allowed deviation of a state vector's Euclidean norm from 1.
pub const NORM_TOL: f64 = 1e-9;

/// Maximum allowed deviation from Hermitian symmetry, entrywise.
pub const HERMITIAN_TOL: f64 = 1e-10;

/// Eigenvalues of a positive semidefinite matrix may dip this far below zero.
pub const PSD_EIGENVALUE_FLOOR: f64 = -1e-10;

/// Trace of a density matrix must equal 1 within this bound.
pub const TRACE_TOL: f64 = 1e-9;

/// Relative threshold below which `pinv_sqrt` treats an eigenvalue as part
/// of the kernel (relative to the largest eigenvalue).
pub const PINV_KERNEL_THRESHOLD: f64 = 1e-10;

/// Tolerance for exact algebraic identities checked on small dense matrices
/// (projector idempotence, twirl equality, spectrum predictions).
pub const IDENTITY_TOL: f64 = 1e-10;

/// Tolerance for state equality checks where the arithmetic is exact up to
/// a handful of floating-point roundings.
pub const STATE_EQ_TOL: f64 = 1e-12;

/// Tolerance for POVM completeness and other sums of many matrix products.
pub const COMPLETENESS_TOL: f64 = 1e-8;

/// Weights of an ensemble must sum to 1 within this bound.
pub const WEIGHT_SUM_TOL: f64 = 1e-9;
