//! Tolerances shared across the crate. Every comparison against zero or
//! against a reference value goes through one of these.

/// Band on c1, c2, |Tr Ω² − 1/4| and |d| inside which a degenerate
/// closed-form branch is taken.
pub const BRANCH: f64 = 1e-8;

/// Wider band on c1 used to *propose* the triple-root candidates; the
/// candidate only wins when its residual is not beaten by the generic path.
pub const NEAR_BRANCH: f64 = 1e-6;

/// The generic candidate must beat a branch candidate's coefficient
/// mismatch by more than this to replace it.
pub const RESIDUAL_PREFERENCE: f64 = 1e-14;

/// Residual above which a returned spectrum is treated as a bug.
pub const RESIDUAL_FAIL: f64 = 1e-6;

/// Radicands in `[-RADICAND, 0)` are clamped to zero.
pub const RADICAND: f64 = 1e-9;

/// |b₀| (and |b₁|) at or below this count as exact zero roots. Exactly
/// rank-deficient trace-one matrices leave about 5e-17 of rounding there;
/// full-rank ones sit many orders of magnitude higher.
pub const ZERO_ROOT: f64 = 2e-16;

/// Largest root shift accepted when a near-zero coefficient is dropped.
pub const DEFLATION_SHIFT: f64 = 1e-10;

/// Decision band on the minimum partial-transpose eigenvalue.
pub const SEPARABILITY: f64 = 1e-10;

pub const HERMITIAN: f64 = 1e-10;
pub const TRACE: f64 = 1e-10;
pub const POSITIVITY: f64 = 1e-10;
pub const NORMALIZATION: f64 = 1e-12;

/// Bloch coefficients of a positive state stay inside [-1 - BLOCH_BOUND, 1 + BLOCH_BOUND].
pub const BLOCH_BOUND: f64 = 1e-10;

/// Cross-path agreement required between the Bloch-parameter coefficient
/// formulas and the Faddeev–LeVerrier coefficients.
pub const COEFF_CROSS_PATH: f64 = 1e-10;

pub const JACOBI_OFF_DIAGONAL: f64 = 1e-14;
pub const JACOBI_MAX_SWEEPS: usize = 64;
