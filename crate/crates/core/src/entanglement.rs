//! Concurrence, entanglement of formation, negativity and the
//! partial-transpose bound on the entanglement of formation.

use crate::bloch::DensityMatrix;
use crate::linalg::{charpoly_of_product, kron, Matrix4, PAULI};
use crate::separability::{peres_test, state_pt_coeffs};
use crate::spectrum::{
    coeffs_from_traces, cubic_eigs, positivity_rhs, quartic_eigs, rank2_eigs, resolvent_shift,
    Branch, CharCoeffs, CubicCoeffs,
};
use crate::{tol, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntanglementReport {
    pub concurrence: f64,
    /// In ebits.
    pub eof: f64,
    pub negativity: f64,
    /// `None` for rank-deficient states.
    pub eof_upper_bound: Option<f64>,
}

/// ρ̃ = (σ_y⊗σ_y) ρ* (σ_y⊗σ_y)
pub fn spin_flip(rho: &DensityMatrix) -> Matrix4 {
    let yy = kron(&PAULI[2], &PAULI[2]);
    yy * rho.matrix().conj() * yy
}

/// Normalized ρρ̃ coefficients below this count as exact zeros.
const RANK_DROP: f64 = 1e-14;

/// Eigenvalues of ρρ̃, descending and non-negative.
pub fn spin_flip_spectrum(rho: &DensityMatrix) -> Result<[f64; 4]> {
    let p = charpoly_of_product(rho.matrix(), &spin_flip(rho));
    let t = -p.c3;
    if t <= 1e-14 {
        return Ok([0.0; 4]);
    }
    // A pure state gives a rank-one product with the whole trace in one root.
    if rho.purity() >= 1.0 - 1e-14 {
        return Ok([t, 0.0, 0.0, 0.0]);
    }
    let (t2, t3) = (t * t, t * t * t);
    let b2 = p.c2 / t2;
    let scaled = CharCoeffs {
        b0: p.c0 / (t2 * t2),
        b1: p.c1 / t3,
        b2,
        tr2: 1.0 - 2.0 * b2,
    };
    // Rank-deficient states leave exact zeros in ρρ̃; the quartic formulas
    // smear a zero cluster, so drop the vanishing roots first.
    let lambdas = if scaled.b0.abs() <= RANK_DROP && scaled.b1.abs() <= RANK_DROP {
        let [hi, lo] = rank2_eigs(scaled.tr2)?;
        [hi, lo, 0.0, 0.0]
    } else if scaled.b0.abs() <= RANK_DROP {
        let c = cubic_eigs(&CubicCoeffs::new(scaled.b1, scaled.b2, scaled.tr2))?;
        let [a, b, c] = c.lambdas;
        [a, b, c, 0.0]
    } else {
        quartic_eigs(&scaled)?.lambdas
    };
    let mut mu = [0.0; 4];
    for (m, l) in mu.iter_mut().zip(lambdas) {
        let v = l * t;
        if v < -1e-8 {
            return Err(Error::InternalInconsistency(format!(
                "negative eigenvalue {v:e} of rho * rho_tilde"
            )));
        }
        *m = v.max(0.0);
    }
    Ok(mu)
}

/// max(0, √μ₁ − √μ₂ − √μ₃ − √μ₄)
pub fn concurrence(rho: &DensityMatrix) -> Result<f64> {
    let [a, b, c, d] = spin_flip_spectrum(rho)?.map(f64::sqrt);
    Ok((a - b - c - d).clamp(0.0, 1.0))
}

/// −x log₂ x − (1 − x) log₂(1 − x), zero at the end points.
pub fn binary_entropy(x: f64) -> f64 {
    if x <= 0.0 || x >= 1.0 {
        return 0.0;
    }
    -(x * x.log2() + (1.0 - x) * (1.0 - x).log2())
}

/// h((1 + √(1 − C²))/2)
pub fn eof_from_concurrence(c: f64) -> f64 {
    let c = c.clamp(0.0, 1.0);
    binary_entropy(0.5 * (1.0 + (1.0 - c * c).sqrt()))
}

pub fn eof(rho: &DensityMatrix) -> Result<f64> {
    Ok(eof_from_concurrence(concurrence(rho)?))
}

/// Σ max(0, −λ) over the partial-transpose spectrum.
pub fn negativity(rho: &DensityMatrix) -> Result<f64> {
    let r = peres_test(rho)?;
    Ok(r.pt_spectrum.iter().map(|&l| (-l).max(0.0)).sum())
}

/// The right-hand side of the explicit separability inequality, evaluated
/// for a full-rank state and clamped to [0, 1]:
///
/// ```text
/// (1/√3)(4Trρ² − 1 + 8c₁ᴾcosφᴾ)^½
///   + (2/√6)[4Trρ² − 1 − 4c₁ᴾcosφᴾ + 3√3(1 + 8b₁ᴾ − 2Trρ²)/(4Trρ² − 1 + 8c₁ᴾcosφᴾ)^½]^½
/// ```
pub fn eof_upper_bound(rho: &DensityMatrix) -> Result<f64> {
    let sp = quartic_eigs(&coeffs_from_traces(rho.matrix())?)?;
    if sp.min() <= tol::BRANCH {
        return Err(Error::NotApplicable(format!(
            "state is rank deficient (smallest eigenvalue {:e})",
            sp.min()
        )));
    }
    let cp = state_pt_coeffs(rho)?;
    let pt = quartic_eigs(&cp)?;
    let raw = match pt.branch {
        Branch::Generic | Branch::C2Zero => {
            positivity_rhs(cp.b1, cp.tr2, resolvent_shift(&cp, pt.branch)?)?
        }
        _ => 1.0 - 4.0 * pt.min(),
    };
    Ok(raw.clamp(0.0, 1.0))
}

pub fn entanglement_report(rho: &DensityMatrix) -> Result<EntanglementReport> {
    let concurrence = concurrence(rho)?;
    let eof = eof_from_concurrence(concurrence);
    let eof_upper_bound = match eof_upper_bound(rho) {
        Ok(b) => Some(b),
        Err(Error::NotApplicable(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some(b) = eof_upper_bound {
        if eof > b + 1e-9 {
            log::warn!("entanglement of formation {eof} exceeds the bound {b}");
        }
    }
    Ok(EntanglementReport {
        concurrence,
        eof,
        negativity: negativity(rho)?,
        eof_upper_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Complex;
    use crate::separability::PureState;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    #[test]
    fn spin_flip_examples() {
        let mixed = DensityMatrix::maximally_mixed();
        assert!(spin_flip(&mixed).approx_eq(mixed.matrix(), 1e-16));
        let bell = DensityMatrix::bell_phi_plus();
        assert!(spin_flip(&bell).approx_eq(bell.matrix(), 1e-16));
        let zero = DensityMatrix::new(Matrix4::diag([1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(spin_flip(&zero).approx_eq(&Matrix4::diag([0.0, 0.0, 0.0, 1.0]), 1e-16));
    }

    #[test]
    fn concurrence_examples() {
        assert!((concurrence(&DensityMatrix::bell_phi_plus()).unwrap() - 1.0).abs() < 1e-14);
        let prod = PureState::product([c(0.6), c(0.8)], [c(1.0), c(1.0)]).unwrap();
        assert_eq!(concurrence(&prod.density()).unwrap(), 0.0);
        let psi = PureState::normalized([
            c(0.3),
            Complex::new(0.1, 0.4),
            c(-0.5),
            Complex::new(0.2, 0.6),
        ])
        .unwrap();
        assert!((concurrence(&psi.density()).unwrap() - 2.0 * psi.q()).abs() < 1e-12);
        assert_eq!(concurrence(&DensityMatrix::maximally_mixed()).unwrap(), 0.0);
    }

    #[test]
    fn werner_measures() {
        for p in [0.2, 0.5, 0.8, 0.95] {
            let w = DensityMatrix::werner(p).unwrap();
            let want = (1.5 * p - 0.5).max(0.0);
            assert!((concurrence(&w).unwrap() - want).abs() < 1e-12, "p = {p}");
            assert!((negativity(&w).unwrap() - (0.75 * p - 0.25).max(0.0)).abs() < 1e-12);
        }
        let e = eof(&DensityMatrix::werner(0.8).unwrap()).unwrap();
        let x = 0.5 * (1.0 + 0.51f64.sqrt());
        assert!((e - binary_entropy(x)).abs() < 1e-12);
    }

    #[test]
    fn eof_end_points() {
        assert_eq!(eof_from_concurrence(0.0), 0.0);
        assert_eq!(eof_from_concurrence(1.0), 1.0);
        assert_eq!(binary_entropy(0.5), 1.0);
        let mut prev = 0.0;
        for k in 0..=1000 {
            let e = eof_from_concurrence(k as f64 / 1000.0);
            assert!(e >= prev);
            prev = e;
        }
    }

    #[test]
    fn upper_bound_examples() {
        let mixed = DensityMatrix::maximally_mixed();
        assert_eq!(eof_upper_bound(&mixed).unwrap(), 0.0);
        assert_eq!(eof(&mixed).unwrap(), 0.0);

        let w = DensityMatrix::werner(0.5).unwrap();
        assert!(eof_upper_bound(&w).unwrap() >= eof(&w).unwrap());

        let near = DensityMatrix::werner(0.99).unwrap();
        let b = eof_upper_bound(&near).unwrap();
        assert!(b >= eof(&near).unwrap() && b <= 1.0);

        assert!(matches!(
            eof_upper_bound(&DensityMatrix::bell_phi_plus()),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn report_for_bell() {
        let r = entanglement_report(&DensityMatrix::bell_phi_plus()).unwrap();
        assert!((r.concurrence - 1.0).abs() < 1e-14);
        assert!((r.eof - 1.0).abs() < 1e-12);
        assert!((r.negativity - 0.5).abs() < 1e-12);
        assert_eq!(r.eof_upper_bound, None);
    }
}
