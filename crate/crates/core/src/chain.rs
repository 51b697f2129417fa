//! Entanglement transfer by repeated noisy swaps.
//!
//! Each swap step is modelled by the depolarizing map ρ ↦ (1 − ε)ρ + ε I/4
//! acting on the effective pair, so after n steps
//! ρₙ = (1 − ε)ⁿ ρ₀ + (1 − (1 − ε)ⁿ) I/4 and, for a pure start with
//! q = |ad − bc|,
//!
//! ```text
//! λ_min(ρₙᴾ) = ¼ [1 − (1 − ε)ⁿ (1 + 4q)]
//! ```

use std::fmt;

use crate::bloch::DensityMatrix;
use crate::linalg::{Complex, Matrix4};
use crate::separability::PureState;
use crate::{tol, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChainParams {
    pub epsilon: f64,
    pub n: u32,
    pub q: f64,
}

impl ChainParams {
    pub fn new(q: f64, epsilon: f64, n: u32) -> Result<Self> {
        check_q(q)?;
        check_epsilon(epsilon)?;
        Ok(Self { epsilon, n, q })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransferDistance {
    Finite(u32),
    /// No noise: entanglement survives any number of steps.
    Unbounded,
}

impl fmt::Display for TransferDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransferDistance::Finite(n) => write!(f, "{n}"),
            TransferDistance::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainReport {
    /// λ_min(ρₙᴾ) for n = 0..=params.n
    pub lambda_min_per_step: Vec<f64>,
    pub n_max: TransferDistance,
    /// Largest ε that keeps the pair entangled after params.n steps.
    pub epsilon_critical: Option<f64>,
}

fn check_q(q: f64) -> Result<()> {
    if !(0.0..=0.5).contains(&q) {
        return Err(Error::OutOfRange {
            name: "q",
            value: q,
            range: "[0, 1/2]",
        });
    }
    Ok(())
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&epsilon) {
        return Err(Error::OutOfRange {
            name: "epsilon",
            value: epsilon,
            range: "[0, 1]",
        });
    }
    Ok(())
}

/// S|ab⟩ = |ba⟩
pub fn swap_gate() -> Matrix4 {
    Matrix4::from_real([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// (1 − ε)ρ + ε I/4
pub fn depolarize(rho: &DensityMatrix, epsilon: f64) -> Result<DensityMatrix> {
    check_epsilon(epsilon)?;
    let m = rho.matrix().scale(1.0 - epsilon) + Matrix4::identity().scale(0.25 * epsilon);
    Ok(DensityMatrix::from_trusted(m))
}

/// n applications of [`depolarize`].
pub fn evolve_chain(rho0: &DensityMatrix, epsilon: f64, n: u32) -> Result<DensityMatrix> {
    check_epsilon(epsilon)?;
    let mut rho = *rho0;
    for _ in 0..n {
        rho = depolarize(&rho, epsilon)?;
    }
    Ok(rho)
}

/// (1 − ε)ⁿ ρ₀ + (1 − (1 − ε)ⁿ) I/4
pub fn evolve_chain_closed_form(
    rho0: &DensityMatrix,
    epsilon: f64,
    n: u32,
) -> Result<DensityMatrix> {
    check_epsilon(epsilon)?;
    let k = (1.0 - epsilon).powf(n as f64);
    let m = rho0.matrix().scale(k) + Matrix4::identity().scale(0.25 * (1.0 - k));
    Ok(DensityMatrix::from_trusted(m))
}

/// a|00⟩ + d|11⟩ with a, d real and ad = q.
pub fn state_with_invariant(q: f64) -> Result<PureState> {
    check_q(q)?;
    let r = (1.0 - 4.0 * q * q).max(0.0).sqrt();
    let a = (0.5 * (1.0 + r)).sqrt();
    let d = q / a;
    let zero = Complex::new(0.0, 0.0);
    PureState::normalized([Complex::new(a, 0.0), zero, zero, Complex::new(d, 0.0)])
}

pub fn chain_lambda_min(q: f64, epsilon: f64, n: u32) -> Result<f64> {
    check_q(q)?;
    check_epsilon(epsilon)?;
    Ok(0.25 * (1.0 - (1.0 - epsilon).powf(n as f64) * (1.0 + 4.0 * q)))
}

fn entangled_after(q: f64, epsilon: f64, n: u32) -> bool {
    0.25 * (1.0 - (1.0 - epsilon).powf(n as f64) * (1.0 + 4.0 * q)) < -tol::SEPARABILITY
}

/// Largest n with λ_min < −τ_sep. The bound −ln(1 + 4q)/ln(1 − ε) gives a
/// starting point that is then corrected by evaluating n and n + 1.
pub fn max_transfer_distance(q: f64, epsilon: f64) -> Result<TransferDistance> {
    check_q(q)?;
    check_epsilon(epsilon)?;
    if !entangled_after(q, epsilon, 0) {
        return Ok(TransferDistance::Finite(0));
    }
    if epsilon == 0.0 {
        return Ok(TransferDistance::Unbounded);
    }
    if epsilon == 1.0 {
        return Ok(TransferDistance::Finite(0));
    }
    let bound = -(4.0 * q).ln_1p() / (-epsilon).ln_1p();
    let mut n = if bound >= u32::MAX as f64 {
        u32::MAX - 1
    } else {
        bound.floor().max(0.0) as u32
    };
    while n > 0 && !entangled_after(q, epsilon, n) {
        n -= 1;
    }
    while n < u32::MAX - 1 && entangled_after(q, epsilon, n + 1) {
        n += 1;
    }
    Ok(TransferDistance::Finite(n))
}

/// ε* = 1 − (1 + 4q)^{−1/n}, where λ_min after n steps is exactly zero.
pub fn critical_noise(q: f64, n: u32) -> Result<f64> {
    check_q(q)?;
    if q == 0.0 {
        return Err(Error::OutOfRange {
            name: "q",
            value: q,
            range: "(0, 1/2]",
        });
    }
    if n == 0 {
        return Err(Error::Precondition("critical noise needs n >= 1".into()));
    }
    Ok(-(-(4.0 * q).ln_1p() / n as f64).exp_m1())
}

pub fn chain_report(params: &ChainParams) -> Result<ChainReport> {
    let ChainParams { epsilon, n, q } = *params;
    let lambda_min_per_step = (0..=n)
        .map(|k| chain_lambda_min(q, epsilon, k))
        .collect::<Result<Vec<_>>>()?;
    let epsilon_critical = if q > 0.0 && n >= 1 {
        Some(critical_noise(q, n)?)
    } else {
        None
    };
    Ok(ChainReport {
        lambda_min_per_step,
        n_max: max_transfer_distance(q, epsilon)?,
        epsilon_critical,
    })
}

/// 16-component state of four qubits; index 8q₁ + 4q₂ + 2q₃ + q₄.
pub type FourQubitState = [Complex; 16];

pub fn kron_vec(a: &[Complex], b: &[Complex]) -> Vec<Complex> {
    a.iter()
        .flat_map(|x| b.iter().map(move |y| x * y))
        .collect()
}

/// (S ⊗ S)|ψ⟩ with the first S on qubits (1, 2) and the second on (3, 4).
pub fn apply_double_swap(psi: &FourQubitState) -> FourQubitState {
    let s = swap_gate();
    let mut out = [Complex::new(0.0, 0.0); 16];
    for (row, o) in out.iter_mut().enumerate() {
        let (r1, r2) = (row / 4, row % 4);
        for (col, x) in psi.iter().enumerate() {
            let (c1, c2) = (col / 4, col % 4);
            *o += s[(r1, c1)] * s[(r2, c2)] * x;
        }
    }
    out
}

/// Reduced density matrix of qubits 1 and 4, basis index 2q₁ + q₄.
pub fn reduced_outer_pair(psi: &FourQubitState) -> Matrix4 {
    let idx = |q1: usize, q2: usize, q3: usize, q4: usize| 8 * q1 + 4 * q2 + 2 * q3 + q4;
    Matrix4::from_fn(|r, c| {
        let (a1, a4) = (r / 2, r % 2);
        let (b1, b4) = (c / 2, c % 2);
        let mut acc = Complex::new(0.0, 0.0);
        for q2 in 0..2 {
            for q3 in 0..2 {
                acc += psi[idx(a1, q2, q3, a4)] * psi[idx(b1, q2, q3, b4)].conj();
            }
        }
        acc
    })
}

/// |c⟩ ⊗ Φ⁺ ⊗ |d⟩ → (S ⊗ S) → reduced state of qubits 1 and 4.
pub fn swap_transfer_demo(c: [Complex; 2], d: [Complex; 2]) -> Result<DensityMatrix> {
    let h = 0.5f64.sqrt();
    let zero = Complex::new(0.0, 0.0);
    let phi = [Complex::new(h, 0.0), zero, zero, Complex::new(h, 0.0)];
    let v = kron_vec(&kron_vec(&c, &phi), &d);
    let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    if (norm - 1.0).abs() > tol::NORMALIZATION {
        return Err(Error::NotNormalized(norm));
    }
    let mut psi = [zero; 16];
    psi.copy_from_slice(&v);
    DensityMatrix::new(reduced_outer_pair(&apply_double_swap(&psi)))
}
