//! Closed-form eigenvalues of 4×4 Hermitian trace-one matrices and what they
//! buy for two qubits: an explicit Peres separability test, concurrence and
//! entanglement of formation, and a noisy entanglement-transfer chain.
//!
//! Every closed-form path has an independent numerical counterpart in
//! [`linalg`] (cyclic Jacobi eigenvalues, Faddeev–LeVerrier characteristic
//! polynomial) that the test suites compare against.
//!
//! Basis ordering is |00⟩, |01⟩, |10⟩, |11⟩ with the first factor being
//! subsystem A.

pub mod bloch;
pub mod chain;
pub mod entanglement;
mod error;
pub mod linalg;
pub mod sample;
pub mod separability;
pub mod spectrum;
pub mod tol;

pub use bloch::{BlochTensor, DensityMatrix, Subsystem};
pub use chain::{ChainParams, ChainReport, TransferDistance};
pub use entanglement::EntanglementReport;
pub use error::{Error, Result};
pub use linalg::{Complex, Matrix2, Matrix4, MonicQuartic, SquareMatrix};
pub use separability::{PureState, SeparabilityReport};
pub use spectrum::{
    Branch, CharCoeffs, CubicBranch, CubicCoeffs, CubicSpectrum, QuarticSpectrum, RootLabel, Route,
    Spectrum, TrigParams,
};
