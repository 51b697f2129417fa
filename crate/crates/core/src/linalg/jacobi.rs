//! Cyclic Jacobi eigenvalues for small Hermitian matrices.
//!
//! This is the verification oracle. It shares no code with the closed-form
//! solver in `spectrum`: no characteristic polynomial, no trigonometric
//! resolvent, just plane rotations until the off-diagonal part is gone.

use super::{Complex, Matrix4, SquareMatrix};
use crate::{tol, Error, Result};

fn off_diagonal_norm<const N: usize>(a: &[[Complex; N]; N]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                s += z.norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigenvalues of a Hermitian matrix, sorted descending.
pub fn jacobi_eigenvalues<const N: usize>(m: &SquareMatrix<N>) -> Result<[f64; N]> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let dev = m.hermitian_deviation();
    if dev > tol::HERMITIAN {
        return Err(Error::NotHermitian(dev));
    }
    // Symmetrize so the rotations see an exactly Hermitian matrix.
    let mut a = SquareMatrix::<N>::from_fn(|i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5).0;

    for _ in 0..tol::JACOBI_MAX_SWEEPS {
        if off_diagonal_norm(&a) < tol::JACOBI_OFF_DIAGONAL {
            return Ok(sorted_diagonal(&a));
        }
        for p in 0..N {
            for q in p + 1..N {
                rotate(&mut a, p, q);
            }
        }
    }
    let off = off_diagonal_norm(&a);
    if off < tol::JACOBI_OFF_DIAGONAL {
        return Ok(sorted_diagonal(&a));
    }
    Err(Error::NoConvergence {
        sweeps: tol::JACOBI_MAX_SWEEPS,
        off,
    })
}

/// Eigenvalues of a 4×4 Hermitian matrix, descending.
pub fn eig_hermitian_oracle(m: &Matrix4) -> Result<[f64; 4]> {
    jacobi_eigenvalues(m)
}

fn sorted_diagonal<const N: usize>(a: &[[Complex; N]; N]) -> [f64; N] {
    let mut d = [0.0; N];
    for (i, x) in d.iter_mut().enumerate() {
        *x = a[i][i].re;
    }
    d.sort_by(|x, y| y.total_cmp(x));
    d
}

/// Zero a[p][q] with U = D·R, where D removes the phase of a[p][q] and R is
/// the real symmetric Jacobi rotation.
fn rotate<const N: usize>(a: &mut [[Complex; N]; N], p: usize, q: usize) {
    let apq = a[p][q];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (1.0 + theta * theta).sqrt());
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let upp = Complex::new(c, 0.0);
    let upq = Complex::new(s, 0.0);
    let uqp = -phase.conj() * s;
    let uqq = phase.conj() * c;

    for row in a.iter_mut() {
        let kp = row[p];
        let kq = row[q];
        row[p] = kp * upp + kq * uqp;
        row[q] = kp * upq + kq * uqq;
    }
    for k in 0..N {
        let pk = a[p][k];
        let qk = a[q][k];
        a[p][k] = upp.conj() * pk + uqp.conj() * qk;
        a[q][k] = upq.conj() * pk + uqq.conj() * qk;
    }
    a[p][q] = Complex::new(0.0, 0.0);
    a[q][p] = Complex::new(0.0, 0.0);
    a[p][p].im = 0.0;
    a[q][q].im = 0.0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{charpoly_flv, trace_power};

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn oracle_examples() {
        let mixed = Matrix4::identity().scale(0.25);
        assert_eq!(eig_hermitian_oracle(&mixed).unwrap(), [0.25; 4]);
        let d = Matrix4::diag([0.1, 0.3, 0.4, 0.2]);
        assert_eq!(eig_hermitian_oracle(&d).unwrap(), [0.4, 0.3, 0.2, 0.1]);
        let h = 0.5f64.sqrt();
        let bell = Matrix4::outer(&[c(h, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(h, 0.0)]);
        let ev = eig_hermitian_oracle(&bell).unwrap();
        for (got, want) in ev.iter().zip([1.0, 0.0, 0.0, 0.0]) {
            assert!((got - want).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let mut m = Matrix4::identity();
        m[(0, 3)] = c(1.0, 0.0);
        assert!(matches!(
            eig_hermitian_oracle(&m),
            Err(Error::NotHermitian(_))
        ));
        m[(0, 3)] = c(f64::NAN, 0.0);
        assert_eq!(eig_hermitian_oracle(&m), Err(Error::NonFinite));
    }

    #[test]
    fn complex_entries_trace_identities() {
        let m = Matrix4::from_fn(|i, j| {
            if i == j {
                c([0.7, -0.2, 0.4, 0.1][i], 0.0)
            } else {
                let (lo, hi) = (i.min(j), i.max(j));
                let z = c(0.1 * (lo + 2 * hi) as f64, 0.07 * (hi - lo) as f64);
                if i < j {
                    z
                } else {
                    z.conj()
                }
            }
        });
        let ev = eig_hermitian_oracle(&m).unwrap();
        let s1: f64 = ev.iter().sum();
        let s2: f64 = ev.iter().map(|x| x * x).sum();
        assert!((s1 - m.trace().re).abs() < 1e-12);
        assert!((s2 - trace_power(&m, 2).re).abs() < 1e-12);
        let p = charpoly_flv(&m);
        for x in ev {
            assert!(p.eval(x).abs() < 1e-9);
        }
    }

    #[test]
    fn works_on_2x2() {
        let m = SquareMatrix::<2>([[c(1.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(1.0, 0.0)]]);
        let ev = jacobi_eigenvalues(&m).unwrap();
        assert!((ev[0] - 2.0).abs() < 1e-15 && ev[1].abs() < 1e-15);
    }
}
