//! Characteristic coefficients and closed-form spectra of 4×4 Hermitian
//! trace-one matrices.

mod coeffs;
mod cubic;
mod quartic;

pub(crate) use coeffs::BlochInvariants;
pub use coeffs::{
    centered_from_traces, coeffs_from_bloch, coeffs_from_traces, CenteredCoeffs, CharCoeffs,
};
pub use cubic::{
    cubic_angle, cubic_eigs, purity_bound_check, rank2_eigs, CubicBranch, CubicCoeffs,
    CubicSpectrum,
};
pub(crate) use quartic::{positivity_rhs, resolvent_shift};
pub use quartic::{
    quartic_eigs, quartic_eigs_centered, resolvent, trig_params, Branch, QuarticSpectrum,
    RootLabel, TrigParams,
};

use crate::linalg::Matrix4;
use crate::{tol, Result};

/// Which closed form produced a spectrum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Quartic(Branch),
    /// One vanishing eigenvalue; the cubic solver.
    OneZero(CubicBranch),
    /// Two vanishing eigenvalues; the quadratic fixed by the purity.
    TwoZero,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::Quartic(b) => b.name(),
            Route::OneZero(b) => b.name(),
            Route::TwoZero => "two-zero",
        }
    }
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Spectrum {
    /// Descending.
    pub lambdas: [f64; 4],
    pub route: Route,
    /// max |p(λ)| over the returned roots.
    pub residual: f64,
}

impl Spectrum {
    pub fn min(&self) -> f64 {
        self.lambdas[3]
    }
}

pub(crate) fn sort_desc(mut v: [f64; 4]) -> [f64; 4] {
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// How many roots vanish to rounding. A coefficient counts as zero when it
/// is within [`tol::ZERO_ROOT`] and dropping it moves the root it carries by
/// less than [`tol::DEFLATION_SHIFT`]: |b₀/b₁| for a single zero root,
/// |b₁/b₂| for a pair. The second test keeps small but genuine clusters
/// (e.g. a triple root near zero) on the quartic path.
pub(crate) fn exact_zero_roots(c: &CharCoeffs) -> usize {
    let small_b0 = c.b0.abs() <= tol::ZERO_ROOT;
    if small_b0 && c.b1.abs() <= tol::ZERO_ROOT && c.b1.abs() <= tol::DEFLATION_SHIFT * c.b2 {
        2
    } else if small_b0 && c.b0.abs() <= tol::DEFLATION_SHIFT * c.b1.abs() {
        1
    } else {
        0
    }
}

/// Roots with `zeros` exact zeros deflated through the quadratic or the
/// cubic. `None` when `zeros` is 0, or 2 outside the quadratic's domain.
pub(crate) fn deflated(c: &CharCoeffs, zeros: usize) -> Result<Option<Spectrum>> {
    let finish = |lambdas: [f64; 4], route| {
        let lambdas = sort_desc(lambdas);
        let residual = lambdas.iter().map(|&x| c.eval(x).abs()).fold(0.0, f64::max);
        Some(Spectrum {
            lambdas,
            route,
            residual,
        })
    };
    match zeros {
        2 => Ok(rank2_eigs(c.tr2)
            .ok()
            .and_then(|[hi, lo]| finish([hi, lo, 0.0, 0.0], Route::TwoZero))),
        1 => {
            let sp = cubic_eigs(&CubicCoeffs::new(c.b1, c.b2, c.tr2))?;
            let [a, b, d] = sp.lambdas;
            Ok(finish([a, b, d, 0.0], Route::OneZero(sp.branch)))
        }
        _ => Ok(None),
    }
}

/// Eigenvalues from characteristic coefficients, descending. Roots that
/// vanish to rounding are removed first: a double zero root is
/// ill-conditioned for the quartic formulas (an O(ε) coefficient error moves
/// it by O(√ε)) but exact for the quadratic.
pub fn spectrum_from_coeffs(c: &CharCoeffs) -> Result<Spectrum> {
    if let Some(s) = deflated(c, exact_zero_roots(c))? {
        return Ok(s);
    }
    let q = quartic_eigs(c)?;
    Ok(Spectrum {
        lambdas: q.lambdas,
        route: Route::Quartic(q.branch),
        residual: q.residual,
    })
}

/// Closed-form eigenvalues of a Hermitian trace-one matrix, descending.
/// Rank-deficient inputs go through [`spectrum_from_coeffs`]; the rest use
/// the centered coefficients of the matrix.
pub fn eigenvalues(m: &Matrix4) -> Result<Spectrum> {
    let c = coeffs_from_traces(m)?;
    if let Some(s) = deflated(&c, exact_zero_roots(&c))? {
        return Ok(s);
    }
    let q = quartic_eigs_centered(&centered_from_traces(m)?)?;
    Ok(Spectrum {
        lambdas: q.lambdas,
        route: Route::Quartic(q.branch),
        residual: q.residual,
    })
}
