//! Peres (positive partial transpose) separability for two qubits, driven by
//! the closed-form spectrum of the partial transpose.

use crate::bloch::{from_bloch, partial_transpose, BlochTensor, DensityMatrix};
use crate::linalg::{Complex, Matrix4};
use crate::spectrum::{
    centered_from_traces, coeffs_from_bloch, coeffs_from_traces, cubic_eigs, exact_zero_roots,
    positivity_rhs, quartic_eigs_centered, rank2_eigs, resolvent_shift, sort_desc, BlochInvariants,
    Branch, CenteredCoeffs, CharCoeffs, CubicBranch, CubicCoeffs, QuarticSpectrum, Route,
};
use crate::{tol, Error, Result};

/// a|00⟩ + b|01⟩ + c|10⟩ + d|11⟩
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState {
    amp: [Complex; 4],
}

impl PureState {
    pub fn new(amp: [Complex; 4]) -> Result<Self> {
        if amp.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n: f64 = amp.iter().map(|z| z.norm_sqr()).sum();
        if (n - 1.0).abs() > tol::NORMALIZATION {
            return Err(Error::NotNormalized(n));
        }
        Ok(Self { amp })
    }

    /// Rescales to unit norm. Zero or non-finite input is rejected.
    pub fn normalized(amp: [Complex; 4]) -> Result<Self> {
        if amp.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite);
        }
        let n: f64 = amp.iter().map(|z| z.norm_sqr()).sum();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::NotNormalized(n));
        }
        let s = 1.0 / n.sqrt();
        Ok(Self {
            amp: amp.map(|z| z * s),
        })
    }

    /// |α⟩ ⊗ |β⟩, each factor normalized first.
    pub fn product(alpha: [Complex; 2], beta: [Complex; 2]) -> Result<Self> {
        Self::normalized([
            alpha[0] * beta[0],
            alpha[0] * beta[1],
            alpha[1] * beta[0],
            alpha[1] * beta[1],
        ])
    }

    pub fn amplitudes(&self) -> &[Complex; 4] {
        &self.amp
    }

    /// |ad − bc|, at most ½.
    pub fn q(&self) -> f64 {
        let [a, b, c, d] = self.amp;
        (a * d - b * c).norm()
    }

    pub fn projector(&self) -> Matrix4 {
        Matrix4::outer(&self.amp)
    }

    pub fn density(&self) -> DensityMatrix {
        DensityMatrix::from_trusted(self.projector())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeparabilityReport {
    /// λ_min(PT) ≥ −τ_sep
    pub separable: bool,
    pub lambda_min_pt: f64,
    /// Descending.
    pub pt_spectrum: [f64; 4],
    pub route: Route,
    /// |λ_min(PT)| ≤ τ_sep
    pub marginal: bool,
    pub pt_coeffs: CharCoeffs,
    /// Verdict of the explicit closed-form inequality for the route taken,
    /// evaluated separately from the sorted spectrum.
    pub explicit_condition: bool,
}

impl SeparabilityReport {
    pub fn branch(&self) -> Option<Branch> {
        match self.route {
            Route::Quartic(b) => Some(b),
            _ => None,
        }
    }
}

/// Characteristic coefficients of the partial transpose on B:
///
/// ```text
/// b₀ᴾ = b₀ − 1/32 [((TrA)² − TrA²) ξ_A·ξ_B + 2ξ_BᵀA²ξ_A − 2TrA ξ_BᵀAξ_A] + 1/16 (a⃗₁×a⃗₂)·a⃗₃
/// b₁ᴾ = b₁ − ¼ (a⃗₁×a⃗₂)·a⃗₃
/// b₂ᴾ = b₂,  Tr(ρᴾ)² = Tr ρ²
/// ```
///
/// `c` must describe the same operator as `t`; both that and the result are
/// checked against the direct coefficient path.
pub fn pt_coeffs(c: &CharCoeffs, t: &BlochTensor) -> Result<CharCoeffs> {
    let from_t = coeffs_from_bloch(t);
    let gap = from_t.max_abs_diff(c);
    if !(gap <= tol::COEFF_CROSS_PATH) {
        return Err(Error::InternalInconsistency(format!(
            "coefficients disagree with the Bloch tensor by {gap:e}"
        )));
    }
    let inv = BlochInvariants::of(t);
    let mapped = CharCoeffs {
        b0: c.b0 - inv.mixed / 32.0 + inv.triple / 16.0,
        b1: c.b1 - inv.triple / 4.0,
        b2: c.b2,
        tr2: c.tr2,
    };
    let direct = coeffs_from_traces(&partial_transpose(&from_bloch(t)))?;
    let gap = direct.max_abs_diff(&mapped);
    if !(gap <= tol::COEFF_CROSS_PATH) {
        log::warn!("partial-transpose coefficient map off by {gap:e} for {t:?}");
        return Err(Error::InternalInconsistency(format!(
            "partial-transpose coefficient map off by {gap:e}"
        )));
    }
    Ok(mapped)
}

/// The explicit positivity inequality for the branch `sp` came from.
fn quartic_condition(cp: &CharCoeffs, sp: &QuarticSpectrum) -> Result<bool> {
    const SQRT3: f64 = 1.732_050_807_568_877_2;
    let limit = 1.0 + 4.0 * tol::SEPARABILITY;
    let s = (4.0 * cp.tr2 - 1.0).max(0.0).sqrt();
    Ok(match sp.branch {
        Branch::Generic | Branch::C2Zero => {
            positivity_rhs(cp.b1, cp.tr2, resolvent_shift(cp, sp.branch)?)? <= limit
        }
        // 1 − 4λ_triple = s/√3
        Branch::DoubleZeroCase1 => s / SQRT3 <= limit,
        // 1 − 4λ_single = √3 s
        Branch::DoubleZeroCase2 => SQRT3 * s <= limit,
        Branch::AllQuarter => true,
    })
}

fn report_from_quartic(cp: CharCoeffs, xp: &CenteredCoeffs) -> Result<SeparabilityReport> {
    let sp = quartic_eigs_centered(xp)?;
    let lambda_min = sp.min();
    let separable = lambda_min >= -tol::SEPARABILITY;
    let explicit = quartic_condition(&cp, &sp)?;
    if explicit != separable {
        log::warn!(
            "explicit inequality ({explicit}) and λ_min sign ({lambda_min:e}) disagree on branch {}",
            sp.branch
        );
    }
    if sp.branch == Branch::DoubleZeroCase1 && !separable {
        log::warn!("triple-root-below pattern reported entangled: λ_min = {lambda_min:e}");
    }
    Ok(SeparabilityReport {
        separable,
        lambda_min_pt: lambda_min,
        pt_spectrum: sp.lambdas,
        route: Route::Quartic(sp.branch),
        marginal: lambda_min.abs() <= tol::SEPARABILITY,
        pt_coeffs: cp,
        explicit_condition: explicit,
    })
}

/// Partial-transpose coefficients of a validated state.
pub fn state_pt_coeffs(rho: &DensityMatrix) -> Result<CharCoeffs> {
    let c = coeffs_from_traces(rho.matrix())?;
    pt_coeffs(&c, &rho.bloch())
}

/// Coefficients of ρᴾ − I/4, taken from the transposed matrix and checked
/// against the Bloch-invariant map from those of ρ − I/4.
pub fn state_pt_centered(rho: &DensityMatrix) -> Result<CenteredCoeffs> {
    let x = centered_from_traces(rho.matrix())?;
    let inv = BlochInvariants::of(&rho.bloch());
    let mapped = CenteredCoeffs {
        e2: x.e2,
        e3: x.e3 + inv.triple / 4.0,
        e4: x.e4 - inv.mixed / 32.0,
    };
    let direct = centered_from_traces(&partial_transpose(rho.matrix()))?;
    let gap = [
        direct.e2 - mapped.e2,
        direct.e3 - mapped.e3,
        direct.e4 - mapped.e4,
    ]
    .into_iter()
    .fold(0.0_f64, |m, d| m.max(d.abs()));
    if !(gap <= tol::COEFF_CROSS_PATH) {
        log::warn!("centered partial-transpose map off by {gap:e}");
        return Err(Error::InternalInconsistency(format!(
            "centered partial-transpose map off by {gap:e}"
        )));
    }
    Ok(direct)
}

/// Canonical verdict: closed-form minimum eigenvalue of ρᴾ. A partial
/// transpose with eigenvalues that vanish to rounding goes through the cubic
/// or quadratic, where those zeros are exact.
pub fn peres_test(rho: &DensityMatrix) -> Result<SeparabilityReport> {
    let cp = state_pt_coeffs(rho)?;
    match rank_report(&cp, exact_zero_roots(&cp))? {
        Some(r) => Ok(r),
        None => report_from_quartic(cp, &state_pt_centered(rho)?),
    }
}

/// {½(1 + r), |ad − bc|, ½(1 − r), −|ad − bc|} with r = √(1 − 4|ad − bc|²),
/// descending.
///
/// For a unit vector 1 − 4|ad − bc|² equals the squared length of the
/// reduced Bloch vector, (|a|² + |b|² − |c|² − |d|²)² + 4|ac̄ + bd̄|², which
/// is what gets evaluated: it does not lose r to cancellation near
/// |ad − bc| = ½.
pub fn pure_pt_spectrum(psi: &PureState) -> [f64; 4] {
    let q = psi.q();
    let [a, b, c, d] = *psi.amplitudes();
    let z = a.norm_sqr() + b.norm_sqr() - c.norm_sqr() - d.norm_sqr();
    let r = (z * z + 4.0 * (a * c.conj() + b * d.conj()).norm_sqr())
        .sqrt()
        .min(1.0);
    // ½(1 − r) = 2q²/(1 + r)
    [0.5 * (1.0 + r), q, 2.0 * q * q / (1.0 + r), -q]
}

pub fn pure_separable(psi: &PureState) -> bool {
    psi.q() <= tol::SEPARABILITY
}

/// The condition that the smallest cubic root is non-negative:
/// √(6 Tr Ω² − 2) cos(φ − π/3) ≤ 1, or Tr Ω² ≤ 5/9 when d = 0.
pub fn cubic_positivity(c: &CubicCoeffs, branch: CubicBranch, phi: Option<f64>) -> bool {
    let limit = 1.0 + 3.0 * tol::SEPARABILITY;
    match (branch, phi) {
        (CubicBranch::AllThird, _) => true,
        (CubicBranch::DZero, _) => c.tr2 <= 5.0 / 9.0 + 2.0 * tol::SEPARABILITY,
        (CubicBranch::Generic, Some(phi)) => {
            (6.0 * c.tr2 - 2.0).max(0.0).sqrt() * (phi - std::f64::consts::FRAC_PI_3).cos() <= limit
        }
        (CubicBranch::Generic, None) => true,
    }
}

fn rank_report(cp: &CharCoeffs, zeros: usize) -> Result<Option<SeparabilityReport>> {
    if zeros == 2 {
        let [hi, lo] = rank2_eigs(cp.tr2)?;
        let lambda_min = lo.min(0.0);
        return Ok(Some(SeparabilityReport {
            separable: lambda_min >= -tol::SEPARABILITY,
            lambda_min_pt: lambda_min,
            pt_spectrum: sort_desc([hi, lo, 0.0, 0.0]),
            route: Route::TwoZero,
            marginal: lambda_min.abs() <= tol::SEPARABILITY,
            pt_coeffs: *cp,
            explicit_condition: true,
        }));
    }
    if zeros == 1 {
        let cc = CubicCoeffs::new(cp.b1, cp.b2, cp.tr2);
        let sp = cubic_eigs(&cc)?;
        let lambda_min = sp.min().min(0.0);
        let [a, b, c] = sp.lambdas;
        return Ok(Some(SeparabilityReport {
            separable: lambda_min >= -tol::SEPARABILITY,
            lambda_min_pt: lambda_min,
            pt_spectrum: sort_desc([a, b, c, 0.0]),
            route: Route::OneZero(sp.branch),
            marginal: lambda_min.abs() <= tol::SEPARABILITY,
            pt_coeffs: *cp,
            explicit_condition: cubic_positivity(&cc, sp.branch, sp.phi),
        }));
    }
    Ok(None)
}

/// Rank shortcuts from partial-transpose coefficients: two vanishing
/// eigenvalues mean separable; one leaves a cubic. Coefficients within
/// [`tol::BRANCH`] count as zero. `None` when no eigenvalue vanishes.
pub fn shortcut_from_pt_coeffs(cp: &CharCoeffs) -> Result<Option<SeparabilityReport>> {
    let zero_b0 = cp.b0.abs() <= tol::BRANCH;
    let zeros = match (zero_b0, cp.b1.abs() <= tol::BRANCH) {
        (true, true) => 2,
        (true, false) => 1,
        _ => 0,
    };
    rank_report(cp, zeros)
}

/// Advisory verdict when ρᴾ is rank deficient; [`peres_test`] stays the
/// authority.
pub fn rank_shortcut(rho: &DensityMatrix) -> Result<Option<SeparabilityReport>> {
    shortcut_from_pt_coeffs(&state_pt_coeffs(rho)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bloch::to_bloch;
    use crate::linalg::eig_hermitian_oracle;
    use crate::spectrum::quartic_eigs;

    fn c(re: f64) -> Complex {
        Complex::new(re, 0.0)
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn pure_state_validation() {
        assert!(PureState::new([c(1.0), c(0.0), c(0.0), c(1.0)]).is_err());
        let s = PureState::normalized([c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        assert!((s.q() - 0.5).abs() < 1e-15);
        assert!(PureState::normalized([c(0.0); 4]).is_err());
    }

    #[test]
    fn pt_coeffs_examples() {
        let mixed = DensityMatrix::maximally_mixed();
        let c0 = coeffs_from_traces(mixed.matrix()).unwrap();
        assert!(state_pt_coeffs(&mixed).unwrap().max_abs_diff(&c0) < 1e-16);

        let bell = DensityMatrix::bell_phi_plus();
        let cp = state_pt_coeffs(&bell).unwrap();
        let s = quartic_eigs(&cp).unwrap();
        assert!(
            close(&s.lambdas, &[0.5, 0.5, 0.5, -0.5], 1e-12),
            "{:?}",
            s.lambdas
        );

        let prod = DensityMatrix::new(Matrix4::diag([1.0, 0.0, 0.0, 0.0])).unwrap();
        let s = quartic_eigs(&state_pt_coeffs(&prod).unwrap()).unwrap();
        assert!(close(&s.lambdas, &[1.0, 0.0, 0.0, 0.0], 1e-12));
    }

    #[test]
    fn pt_coeffs_rejects_mismatched_input() {
        let bell = DensityMatrix::bell_phi_plus();
        let wrong = coeffs_from_traces(DensityMatrix::maximally_mixed().matrix()).unwrap();
        assert!(matches!(
            pt_coeffs(&wrong, &bell.bloch()),
            Err(Error::InternalInconsistency(_))
        ));
    }

    #[test]
    fn peres_examples() {
        let r = peres_test(&DensityMatrix::bell_phi_plus()).unwrap();
        assert!(
            !r.separable
                && (r.lambda_min_pt + 0.5).abs() < 1e-12
                && r.explicit_condition == r.separable
        );
        let r = peres_test(&DensityMatrix::maximally_mixed()).unwrap();
        assert!(r.separable && (r.lambda_min_pt - 0.25).abs() < 1e-15);
        assert_eq!(r.route, Route::Quartic(Branch::AllQuarter));

        let r = peres_test(&DensityMatrix::werner(1.0 / 3.0).unwrap()).unwrap();
        assert!(r.separable && r.marginal && r.lambda_min_pt.abs() < 1e-15);
        let r = peres_test(&DensityMatrix::werner(0.34).unwrap()).unwrap();
        assert!(!r.separable && !r.marginal && r.explicit_condition == r.separable);
        let r = peres_test(&DensityMatrix::werner(0.32).unwrap()).unwrap();
        assert!(r.separable && r.explicit_condition);
        assert!((r.lambda_min_pt - (1.0 - 3.0 * 0.32) / 4.0).abs() < 1e-14);
    }

    #[test]
    fn pure_pt_examples() {
        let bell = PureState::normalized([c(1.0), c(0.0), c(0.0), c(1.0)]).unwrap();
        assert!(close(
            &pure_pt_spectrum(&bell),
            &[0.5, 0.5, 0.5, -0.5],
            1e-15
        ));
        assert!(!pure_separable(&bell));

        let zero = PureState::new([c(1.0), c(0.0), c(0.0), c(0.0)]).unwrap();
        assert_eq!(pure_pt_spectrum(&zero), [1.0, 0.0, 0.0, -0.0]);

        let psi = PureState::new([c(0.9f64.sqrt()), c(0.0), c(0.0), c(0.1f64.sqrt())]).unwrap();
        let want = [0.9, 0.3, 0.1, -0.3];
        assert!(close(&pure_pt_spectrum(&psi), &want, 1e-15));
        let oracle = eig_hermitian_oracle(&partial_transpose(&psi.projector())).unwrap();
        assert!(close(&oracle, &want, 1e-12));
    }

    #[test]
    fn product_states_are_separable() {
        let h = 0.5f64.sqrt();
        let p = PureState::product([c(h), c(h)], [c(1.0), c(0.0)]).unwrap();
        assert!(pure_separable(&p));
        let p = PureState::product(
            [c(0.6), Complex::new(0.0, 0.8)],
            [c(0.28), Complex::new(-0.96, 0.0)],
        )
        .unwrap();
        assert!(pure_separable(&p));
        assert!(peres_test(&p.density()).unwrap().separable);
    }

    #[test]
    fn two_zero_shortcut() {
        // PT of diag(½, 0, 0, ½) is itself: two vanishing eigenvalues.
        let rho = DensityMatrix::new(Matrix4::diag([0.5, 0.0, 0.0, 0.5])).unwrap();
        let r = rank_shortcut(&rho).unwrap().unwrap();
        assert_eq!(r.route, Route::TwoZero);
        assert!(r.separable);
        assert!(close(&r.pt_spectrum, &[0.5, 0.5, 0.0, 0.0], 1e-15));
        assert!(peres_test(&rho).unwrap().separable);
    }

    #[test]
    fn one_zero_shortcut() {
        let rho = DensityMatrix::new(Matrix4::diag([0.5, 0.3, 0.2, 0.0])).unwrap();
        let r = rank_shortcut(&rho).unwrap().unwrap();
        assert_eq!(r.route, Route::OneZero(CubicBranch::Generic));
        assert!(r.separable && r.explicit_condition);
        assert_eq!(r.separable, peres_test(&rho).unwrap().separable);

        // A Hermitian trace-one operator with a zero and a negative eigenvalue.
        let cp = coeffs_from_traces(&Matrix4::diag([0.6, 0.5, 0.0, -0.1])).unwrap();
        let r = shortcut_from_pt_coeffs(&cp).unwrap().unwrap();
        assert!(!r.separable && !r.explicit_condition);
        assert!((r.lambda_min_pt + 0.1).abs() < 1e-13);
    }

    #[test]
    fn d_zero_shortcut_uses_five_ninths() {
        for (tr2, want) in [(0.5, true), (0.6, false)] {
            let s = (1.5f64).sqrt() * (3.0 * tr2 - 1.0f64).sqrt();
            let d = [(1.0 + s) / 3.0, 1.0 / 3.0, (1.0 - s) / 3.0, 0.0];
            let cp = coeffs_from_traces(&Matrix4::diag(d)).unwrap();
            let r = shortcut_from_pt_coeffs(&cp).unwrap().unwrap();
            assert_eq!(r.route, Route::OneZero(CubicBranch::DZero));
            assert_eq!(r.explicit_condition, want);
            assert_eq!(r.separable, want);
        }
    }

    #[test]
    fn full_rank_pt_has_no_shortcut() {
        assert!(rank_shortcut(&DensityMatrix::maximally_mixed())
            .unwrap()
            .is_none());
        let bell = to_bloch(DensityMatrix::bell_phi_plus().matrix()).unwrap();
        let c = coeffs_from_bloch(&bell);
        assert!(shortcut_from_pt_coeffs(&pt_coeffs(&c, &bell).unwrap())
            .unwrap()
            .is_none());
    }
}
