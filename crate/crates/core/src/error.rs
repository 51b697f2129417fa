use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range 0..{len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("matrix has a non-finite entry")]
    NonFinite,

    #[error("matrix is not Hermitian (max |m_ij - conj(m_ji)| = {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    WrongTrace(f64),

    #[error("matrix is not positive semidefinite (min eigenvalue {0:e})")]
    NotPositive(f64),

    #[error("state is not normalized (sum |amp|^2 = {0})")]
    NotNormalized(f64),

    #[error("{name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("Jacobi sweep cap {sweeps} reached (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },

    #[error("c1 = {c1:e} and c2 = {c2:e} are both at the branch tolerance")]
    DegenerateBoth { c1: f64, c2: f64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
