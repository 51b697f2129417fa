//! Complex 4×4 arithmetic, Pauli matrices and the two independent numerical
//! oracles (Faddeev–LeVerrier coefficients, Jacobi eigenvalues).

mod charpoly;
mod jacobi;
mod matrix;

pub use charpoly::{charpoly_flv, charpoly_flv_complex, charpoly_of_product, MonicQuartic};
pub use jacobi::{eig_hermitian_oracle, jacobi_eigenvalues};
pub use matrix::{is_hermitian, kron, pauli, trace_power, Complex, Matrix2, Matrix4, SquareMatrix};

pub(crate) use matrix::{pauli_pair, PAULI};
