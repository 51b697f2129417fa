//! Pauli (Bloch) coefficient representation of two-qubit operators,
//!
//! ρ = ¼ Σ_{μν} a_{μν} σ_μ ⊗ σ_ν,   a_{μν} = Tr(ρ σ_μ ⊗ σ_ν),
//!
//! and partial transposition in both representations.

use crate::linalg::{eig_hermitian_oracle, pauli_pair, Complex, Matrix2, Matrix4};
use crate::{tol, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Real coefficients a_{μν}. Row index μ belongs to subsystem A.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochTensor {
    a: [[f64; 4]; 4],
}

impl BlochTensor {
    /// Takes the coefficients as given, except that a₀₀ is forced to 1.
    pub fn new(mut a: [[f64; 4]; 4]) -> Result<Self> {
        if a.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite);
        }
        a[0][0] = 1.0;
        Ok(Self { a })
    }

    pub fn maximally_mixed() -> Self {
        let mut a = [[0.0; 4]; 4];
        a[0][0] = 1.0;
        Self { a }
    }

    /// Local Bloch vectors and correlation matrix assembled into a tensor.
    pub fn from_parts(xi_a: [f64; 3], xi_b: [f64; 3], corr: [[f64; 3]; 3]) -> Result<Self> {
        let mut a = [[0.0; 4]; 4];
        for i in 0..3 {
            a[i + 1][0] = xi_a[i];
            a[0][i + 1] = xi_b[i];
            for j in 0..3 {
                a[i + 1][j + 1] = corr[i][j];
            }
        }
        Self::new(a)
    }

    pub fn coeff(&self, mu: usize, nu: usize) -> f64 {
        self.a[mu][nu]
    }

    pub fn as_array(&self) -> &[[f64; 4]; 4] {
        &self.a
    }

    /// ξ_A = (a₁₀, a₂₀, a₃₀)
    pub fn xi_a(&self) -> [f64; 3] {
        [self.a[1][0], self.a[2][0], self.a[3][0]]
    }

    /// ξ_B = (a₀₁, a₀₂, a₀₃)
    pub fn xi_b(&self) -> [f64; 3] {
        [self.a[0][1], self.a[0][2], self.a[0][3]]
    }

    /// The 3×3 correlation matrix A = {a_ij}, i, j ∈ 1..3. Its rows are the
    /// vectors a⃗₁, a⃗₂, a⃗₃.
    pub fn correlation(&self) -> [[f64; 3]; 3] {
        let mut m = [[0.0; 3]; 3];
        for (i, row) in m.iter_mut().enumerate() {
            row.copy_from_slice(&self.a[i + 1][1..4]);
        }
        m
    }

    /// ¼ Σ a_{μν}², which equals Tr ρ².
    pub fn purity(&self) -> f64 {
        0.25 * self.a.iter().flatten().map(|x| x * x).sum::<f64>()
    }

    /// Whether every coefficient lies in [−1, 1] (up to [`tol::BLOCH_BOUND`]).
    /// Always true for positive states; Hermitian non-positive operators can
    /// violate it.
    pub fn is_bounded(&self) -> bool {
        self.a
            .iter()
            .flatten()
            .all(|x| x.abs() <= 1.0 + tol::BLOCH_BOUND)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.a
            .iter()
            .flatten()
            .zip(other.a.iter().flatten())
            .map(|(x, y)| (x - y).abs())
            .fold(0.0, f64::max)
    }
}

/// A two-qubit density matrix: Hermitian and trace one, positive semidefinite
/// unless built with [`DensityMatrix::hermitian_trace_one`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    m: Matrix4,
}

fn check_hermitian_trace_one(m: &Matrix4) -> Result<()> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let dev = m.hermitian_deviation();
    if dev > tol::HERMITIAN {
        return Err(Error::NotHermitian(dev));
    }
    let tr = m.trace();
    if (tr.re - 1.0).abs() > tol::TRACE || tr.im.abs() > tol::TRACE {
        return Err(Error::WrongTrace(tr.re));
    }
    Ok(())
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity (the latter through
    /// the Jacobi oracle).
    pub fn new(m: Matrix4) -> Result<Self> {
        check_hermitian_trace_one(&m)?;
        let min = eig_hermitian_oracle(&m)?[3];
        if min < -tol::POSITIVITY {
            return Err(Error::NotPositive(min));
        }
        Ok(Self { m })
    }

    /// Hermitian and trace one, positivity not checked. Partial transposes of
    /// entangled states land here.
    pub fn hermitian_trace_one(m: Matrix4) -> Result<Self> {
        check_hermitian_trace_one(&m)?;
        Ok(Self { m })
    }

    /// Positive by construction; skips the oracle.
    pub(crate) fn from_trusted(m: Matrix4) -> Self {
        Self { m }
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.m
    }

    pub fn into_matrix(self) -> Matrix4 {
        self.m
    }

    pub fn maximally_mixed() -> Self {
        Self::from_trusted(Matrix4::identity().scale(0.25))
    }

    /// |Φ⁺⟩⟨Φ⁺| with Φ⁺ = (|00⟩ + |11⟩)/√2.
    pub fn bell_phi_plus() -> Self {
        let mut m = Matrix4::zeros();
        for (i, j) in [(0, 0), (0, 3), (3, 0), (3, 3)] {
            m[(i, j)] = Complex::new(0.5, 0.0);
        }
        Self::from_trusted(m)
    }

    /// p·|Φ⁺⟩⟨Φ⁺| + (1 − p)·I/4
    pub fn werner(p: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::OutOfRange {
                name: "p",
                value: p,
                range: "[0, 1]",
            });
        }
        let m = Self::bell_phi_plus().m.scale(p) + Matrix4::identity().scale((1.0 - p) / 4.0);
        Ok(Self::from_trusted(m))
    }

    pub fn bloch(&self) -> BlochTensor {
        bloch_unchecked(&self.m)
    }

    /// Tr ρ²
    pub fn purity(&self) -> f64 {
        crate::linalg::trace_power(&self.m, 2).re
    }
}

fn bloch_unchecked(m: &Matrix4) -> BlochTensor {
    let mut a = [[0.0; 4]; 4];
    for (mu, row) in a.iter_mut().enumerate() {
        for (nu, x) in row.iter_mut().enumerate() {
            *x = (*m * pauli_pair(mu, nu)).trace().re;
        }
    }
    a[0][0] = 1.0;
    BlochTensor { a }
}

/// a_{μν} = Re Tr(m · σ_μ⊗σ_ν) for a Hermitian trace-one `m`.
pub fn to_bloch(m: &Matrix4) -> Result<BlochTensor> {
    check_hermitian_trace_one(m)?;
    let mut a = [[0.0; 4]; 4];
    for (mu, row) in a.iter_mut().enumerate() {
        for (nu, x) in row.iter_mut().enumerate() {
            let z = (*m * pauli_pair(mu, nu)).trace();
            if z.im.abs() > tol::HERMITIAN {
                return Err(Error::InternalInconsistency(format!(
                    "imaginary Bloch coefficient a{mu}{nu} = {:e}",
                    z.im
                )));
            }
            *x = z.re;
        }
    }
    a[0][0] = 1.0;
    Ok(BlochTensor { a })
}

/// ¼ Σ a_{μν} σ_μ⊗σ_ν
pub fn from_bloch(t: &BlochTensor) -> Matrix4 {
    let mut m = Matrix4::zeros();
    for mu in 0..4 {
        for nu in 0..4 {
            let a = t.a[mu][nu];
            if a != 0.0 {
                m = m + pauli_pair(mu, nu).scale(a);
            }
        }
    }
    m.scale(0.25)
}

/// (σ₀ + ξ⃗·σ⃗)/2 for the requested subsystem.
pub fn reduced_state(t: &BlochTensor, which: Subsystem) -> Matrix2 {
    let xi = match which {
        Subsystem::A => t.xi_a(),
        Subsystem::B => t.xi_b(),
    };
    let mut m = crate::linalg::pauli(0).expect("σ0");
    for (k, x) in xi.iter().enumerate() {
        m = m + crate::linalg::pauli(k + 1).expect("σk").scale(*x);
    }
    m.scale(0.5)
}

/// Partial trace of a 4×4 operator, keeping `keep`.
pub fn partial_trace(m: &Matrix4, keep: Subsystem) -> Matrix2 {
    Matrix2::from_fn(|i, j| match keep {
        Subsystem::A => m[(2 * i, 2 * j)] + m[(2 * i + 1, 2 * j + 1)],
        Subsystem::B => m[(i, j)] + m[(2 + i, 2 + j)],
    })
}

/// Transpose on subsystem B: entry (2i+k, 2j+l) moves to (2i+l, 2j+k).
pub fn partial_transpose(m: &Matrix4) -> Matrix4 {
    Matrix4::from_fn(|r, c| {
        let (i, k) = (r / 2, r % 2);
        let (j, l) = (c / 2, c % 2);
        m[(2 * i + l, 2 * j + k)]
    })
}

/// Transpose on subsystem A: entry (2i+k, 2j+l) moves to (2j+k, 2i+l).
pub fn partial_transpose_a(m: &Matrix4) -> Matrix4 {
    Matrix4::from_fn(|r, c| {
        let (i, k) = (r / 2, r % 2);
        let (j, l) = (c / 2, c % 2);
        m[(2 * j + k, 2 * i + l)]
    })
}

/// Partial transpose on B in coefficient form: σ_y is the only Pauli matrix
/// that changes under transposition, so the ν = 2 column flips sign.
pub fn partial_transpose_bloch(t: &BlochTensor) -> BlochTensor {
    let mut a = t.a;
    for row in a.iter_mut() {
        row[2] = -row[2];
    }
    BlochTensor { a }
}
