use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::{Error, Result};

pub type Complex = Complex64;

const ZERO: Complex = Complex::new(0.0, 0.0);
const ONE: Complex = Complex::new(1.0, 0.0);

/// Dense N×N complex matrix stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareMatrix<const N: usize>(pub [[Complex; N]; N]);

pub type Matrix2 = SquareMatrix<2>;
pub type Matrix4 = SquareMatrix<4>;

impl<const N: usize> Default for SquareMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> SquareMatrix<N> {
    pub fn zeros() -> Self {
        Self([[ZERO; N]; N])
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| if i == j { ONE } else { ZERO })
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.0[i][j] = f(i, j);
            }
        }
        m
    }

    pub fn from_real(rows: [[f64; N]; N]) -> Self {
        Self::from_fn(|i, j| Complex::new(rows[i][j], 0.0))
    }

    pub fn diag(d: [f64; N]) -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                Complex::new(d[i], 0.0)
            } else {
                ZERO
            }
        })
    }

    /// |v⟩⟨v| for an arbitrary (not necessarily normalized) vector.
    pub fn outer(v: &[Complex; N]) -> Self {
        Self::from_fn(|i, j| v[i] * v[j].conj())
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn conj(&self) -> Self {
        Self::from_fn(|i, j| self.0[i][j].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i])
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }

    pub fn mul_vec(&self, v: &[Complex; N]) -> [Complex; N] {
        let mut out = [ZERO; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }

    pub fn is_finite(&self) -> bool {
        self.0
            .iter()
            .flatten()
            .all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }

    /// Entrywise comparison with an explicit absolute tolerance.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// max |m(i,j) − conj(m(j,i))|
    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity();
        for _ in 0..k {
            acc = acc * *self;
        }
        acc
    }
}

impl<const N: usize> Index<(usize, usize)> for SquareMatrix<N> {
    type Output = Complex;

    fn index(&self, (i, j): (usize, usize)) -> &Complex {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for SquareMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Mul for SquareMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| (0..N).map(|k| self.0[i][k] * rhs.0[k][j]).sum())
    }
}

impl<const N: usize> Mul<Complex> for SquareMatrix<N> {
    type Output = Self;

    fn mul(self, s: Complex) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * s)
    }
}

impl<const N: usize> Mul<f64> for SquareMatrix<N> {
    type Output = Self;

    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl<const N: usize> Add for SquareMatrix<N> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<const N: usize> Sub for SquareMatrix<N> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<const N: usize> Neg for SquareMatrix<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

/// σ₀ = I, σ₁ = σx, σ₂ = σy, σ₃ = σz.
pub fn pauli(mu: usize) -> Result<Matrix2> {
    let i = Complex::i();
    let m = match mu {
        0 => [[ONE, ZERO], [ZERO, ONE]],
        1 => [[ZERO, ONE], [ONE, ZERO]],
        2 => [[ZERO, -i], [i, ZERO]],
        3 => [[ONE, ZERO], [ZERO, -ONE]],
        _ => return Err(Error::IndexOutOfRange { index: mu, len: 4 }),
    };
    Ok(SquareMatrix(m))
}

/// σ_μ ⊗ σ_ν for μ, ν in 0..4. Panics on out-of-range indices; callers pass
/// loop indices.
pub(crate) fn pauli_pair(mu: usize, nu: usize) -> Matrix4 {
    kron(&PAULI[mu], &PAULI[nu])
}

pub(crate) const PAULI: [Matrix2; 4] = {
    let i = Complex::new(0.0, 1.0);
    let mi = Complex::new(0.0, -1.0);
    let m1 = Complex::new(-1.0, 0.0);
    [
        SquareMatrix([[ONE, ZERO], [ZERO, ONE]]),
        SquareMatrix([[ZERO, ONE], [ONE, ZERO]]),
        SquareMatrix([[ZERO, mi], [i, ZERO]]),
        SquareMatrix([[ONE, ZERO], [ZERO, m1]]),
    ]
};

/// Kronecker product: entry (2i+k, 2j+l) = p(i,j)·q(k,l).
pub fn kron(p: &Matrix2, q: &Matrix2) -> Matrix4 {
    Matrix4::from_fn(|r, c| p.0[r / 2][c / 2] * q.0[r % 2][c % 2])
}

pub fn is_hermitian<const N: usize>(m: &SquareMatrix<N>, tol: f64) -> bool {
    m.hermitian_deviation() <= tol
}

/// Tr(m^k) by repeated multiplication. For Hermitian input the imaginary part
/// is rounding noise.
pub fn trace_power<const N: usize>(m: &SquareMatrix<N>, k: u32) -> Complex {
    m.pow(k).trace()
}
