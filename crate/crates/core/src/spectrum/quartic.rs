//! Closed-form eigenvalues of a 4×4 Hermitian trace-one matrix from its
//! characteristic coefficients.
//!
//! With
//!
//! ```text
//! c₁ = √(12b₀ + 3b₁ + b₂²)
//! c₂ = 27b₁² + b₀(27 − 72b₂) + 9b₁b₂ + 2b₂³
//! cos 3φ = c₂ / (2c₁³)
//! ```
//!
//! the generic eigenvalues are
//!
//! ```text
//! λ^±(∓) = ¼ ∓ R/(4√3) ± 1/(2√6) · [4t − 1 − 4c₁cosφ ± 3√3(1 + 8b₁ − 2t)/R]^½
//! R      = (4t − 1 + 8c₁cosφ)^½,   t = Tr Ω²
//! ```
//!
//! Degenerate coefficient patterns (c₂ = 0, c₁ = c₂ = 0, Ω = I/4) have their
//! own closed forms. Because floating point never hits those patterns
//! exactly, a degenerate candidate is compared against the generic one and
//! kept unless the generic roots reproduce the coefficients clearly better.
//! The comparison uses the elementary symmetric functions rather than the
//! polynomial value: near a cluster of k roots the polynomial value shrinks
//! like δᵏ while the coefficient mismatch only shrinks like δ².
//!
//! Everything is evaluated on the centered coefficients of Ω − I/4 (see
//! [`CenteredCoeffs`]). In those terms 4t − 1 = −8e₂, 1 + 8b₁ − 2t = −8e₃,
//! and c₁, c₂ are the shift-invariant
//!
//! ```text
//! c₁² = e₂² + 12e₄,   c₂ = 2e₂³ − 72e₂e₄ + 27e₃²
//! ```

use std::f64::consts::FRAC_PI_3;
use std::fmt;

use super::{CenteredCoeffs, CharCoeffs};
use crate::{tol, Error, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;
const SQRT6: f64 = 2.449_489_742_783_178;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Branch {
    Generic,
    C2Zero,
    /// Triple root below the single one.
    DoubleZeroCase1,
    /// Triple root above the single one.
    DoubleZeroCase2,
    AllQuarter,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::Generic => "generic",
            Branch::C2Zero => "c2-zero",
            Branch::DoubleZeroCase1 => "double-zero-case-1",
            Branch::DoubleZeroCase2 => "double-zero-case-2",
            Branch::AllQuarter => "all-quarter",
        }
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which closed-form expression produced an eigenvalue. `LowerMinus` is
/// λ⁻(−), `UpperPlus` is λ⁺(+), and so on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootLabel {
    LowerMinus,
    LowerPlus,
    UpperMinus,
    UpperPlus,
    Triple,
    Single,
    Quarter,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TrigParams {
    pub c1: f64,
    pub c2: f64,
    /// In [0, π/3].
    pub phi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuarticSpectrum {
    /// Descending.
    pub lambdas: [f64; 4],
    pub labels: [RootLabel; 4],
    pub branch: Branch,
    /// max |P(λ)| over the returned eigenvalues.
    pub residual: f64,
}

impl QuarticSpectrum {
    pub fn min(&self) -> f64 {
        self.lambdas[3]
    }

    pub fn max(&self) -> f64 {
        self.lambdas[0]
    }
}

/// (c₁, c₂). A slightly negative 12b₀ + 3b₁ + b₂² is clamped to zero.
pub fn resolvent(c: &CharCoeffs) -> Result<(f64, f64)> {
    centered_resolvent(&CenteredCoeffs::from_char(c))
}

fn centered_resolvent(x: &CenteredCoeffs) -> Result<(f64, f64)> {
    let CenteredCoeffs { e2, e3, e4 } = *x;
    let c1_sq = e2 * e2 + 12.0 * e4;
    if !c1_sq.is_finite() || !e3.is_finite() {
        return Err(Error::NonFinite);
    }
    if c1_sq < -1e-12 {
        return Err(Error::Precondition(format!(
            "12b0 + 3b1 + b2^2 = {c1_sq:e} < 0: spectrum is not real"
        )));
    }
    let c1 = c1_sq.max(0.0).sqrt();
    let c2 = 2.0 * e2 * e2 * e2 - 72.0 * e2 * e4 + 27.0 * e3 * e3;
    Ok((c1, c2))
}

fn angle(c1: f64, c2: f64) -> Option<f64> {
    let ratio = c2 / (2.0 * c1 * c1 * c1);
    if ratio.is_nan() {
        return None;
    }
    Some(ratio.clamp(-1.0, 1.0).acos() / 3.0)
}

pub fn trig_params(c: &CharCoeffs) -> Result<TrigParams> {
    let (c1, c2) = resolvent(c)?;
    if c1 <= tol::BRANCH {
        return Err(Error::DegenerateBoth { c1, c2 });
    }
    let phi = angle(c1, c2).ok_or(Error::DegenerateBoth { c1, c2 })?;
    Ok(TrigParams { c1, c2, phi })
}

pub(crate) fn clamp_radicand(x: f64, what: &str) -> Result<f64> {
    if x >= 0.0 {
        Ok(x)
    } else if x >= -tol::RADICAND {
        Ok(0.0)
    } else {
        Err(Error::InternalInconsistency(format!(
            "negative radicand {what} = {x:e}"
        )))
    }
}

/// The four roots, shifted by −¼, for a chosen resolvent shift `c₁cosφ`
/// (zero on the c₂ = 0 branch), in the order λ⁻(−), λ⁺(−), λ⁻(+), λ⁺(+).
fn ferrari_roots(x: &CenteredCoeffs, shift: f64) -> Result<[f64; 4]> {
    let a = -8.0 * x.e2;
    let outer = clamp_radicand(a + 8.0 * shift, "4t - 1 + 8c1 cos(phi)")?.sqrt();
    if outer == 0.0 {
        return Err(Error::InternalInconsistency(
            "outer radical vanishes off the all-quarter branch".into(),
        ));
    }
    let s = a - 4.0 * shift;
    let t = 3.0 * SQRT3 * (-8.0 * x.e3) / outer;
    let lower = -outer / (4.0 * SQRT3);
    let upper = outer / (4.0 * SQRT3);
    let dm = clamp_radicand(s + t, "lower inner")?.sqrt() / (2.0 * SQRT6);
    let dp = clamp_radicand(s - t, "upper inner")?.sqrt() / (2.0 * SQRT6);
    Ok([lower - dm, lower + dm, upper - dp, upper + dp])
}

const FERRARI_LABELS: [RootLabel; 4] = [
    RootLabel::LowerMinus,
    RootLabel::LowerPlus,
    RootLabel::UpperMinus,
    RootLabel::UpperPlus,
];

/// max_k |e_k(λ) − want[k − 1]| over the elementary symmetric functions
/// e₁ … e_n of `lambdas`.
pub(crate) fn vieta_mismatch(lambdas: &[f64], want: &[f64]) -> f64 {
    let e = elementary(lambdas);
    e[1..]
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

fn elementary(xs: &[f64]) -> Vec<f64> {
    let mut e = vec![0.0; xs.len() + 1];
    e[0] = 1.0;
    for (n, &x) in xs.iter().enumerate() {
        for k in (1..=n + 1).rev() {
            e[k] += x * e[k - 1];
        }
    }
    e
}

/// Mismatch of e₂, e₃, e₄ of the shifted roots, each measured in units of
/// σᵏ where σ is the spread implied by the coefficients. Scale free, so a
/// tight cluster is judged as strictly as a wide one.
/// Spread of the roots about ¼ implied by the centered coefficients.
fn root_scale(x: &CenteredCoeffs) -> f64 {
    [
        x.e2.abs().sqrt(),
        x.e3.abs().cbrt(),
        x.e4.abs().sqrt().sqrt(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

fn centered_mismatch(mus: &[f64; 4], x: &CenteredCoeffs) -> f64 {
    let e = elementary(mus);
    let sigma = root_scale(x);
    let want = [x.e2, x.e3, x.e4];
    (0..3)
        .map(|i| {
            let diff = (e[i + 2] - want[i]).abs();
            if sigma > 0.0 {
                diff / sigma.powi(i as i32 + 2)
            } else {
                diff
            }
        })
        .fold(0.0, f64::max)
}

struct Candidate {
    lambdas: [f64; 4],
    labels: [RootLabel; 4],
    branch: Branch,
    mismatch: f64,
}

impl Candidate {
    /// `mus` are the roots minus ¼, computed directly so that clustered
    /// roots keep their relative precision.
    fn new(x: &CenteredCoeffs, mus: [f64; 4], labels: [RootLabel; 4], branch: Branch) -> Self {
        Self::with_lambdas(x, mus.map(|m| 0.25 + m), mus, labels, branch)
    }

    fn with_lambdas(
        x: &CenteredCoeffs,
        lambdas: [f64; 4],
        mus: [f64; 4],
        labels: [RootLabel; 4],
        branch: Branch,
    ) -> Self {
        Self {
            lambdas,
            labels,
            branch,
            mismatch: centered_mismatch(&mus, x),
        }
    }
}

/// Closed-form b₀, b₁ for the two triple-root patterns at purity `tr2`.
/// Index 0 is case one (triple root below), index 1 is case two.
#[cfg(test)]
fn double_zero_coefficients(tr2: f64) -> [(f64, f64); 2] {
    let s3 = SQRT3 * (4.0 * tr2 - 1.0).max(0.0).powf(1.5);
    let base0 = 3.0 - 6.0 * tr2 - 6.0 * tr2 * tr2;
    let base1 = 18.0 * tr2 - 9.0;
    [
        ((base0 + s3) / 288.0, (base1 - s3) / 72.0),
        ((base0 - s3) / 288.0, (base1 + s3) / 72.0),
    ]
}

/// Triple root plus a single one. The two closed-form (b₀, b₁) patterns
/// differ exactly by the sign of e₃: 8δ³ for a triple root at ¼ − δ.
fn double_zero(x: &CenteredCoeffs) -> Result<Candidate> {
    let tr2 = 0.25 - 2.0 * x.e2;
    let s = clamp_radicand(-8.0 * x.e2, "4t - 1")?.sqrt();
    let labels = [
        RootLabel::Triple,
        RootLabel::Triple,
        RootLabel::Triple,
        RootLabel::Single,
    ];
    // ¼ ∓ s/(4√3) and ¼ ± (√3/4)s, written without cancellation near zero;
    // in case one the single root follows from the unit trace.
    let d = s / (4.0 * SQRT3);
    let cand = if x.e3 >= 0.0 {
        let triple = (1.0 - tr2) / (SQRT3 * (SQRT3 + s));
        let single = 1.0 - 3.0 * triple;
        let l = [triple, triple, triple, single];
        Candidate::with_lambdas(x, l, [-d, -d, -d, 3.0 * d], labels, Branch::DoubleZeroCase1)
    } else {
        let triple = 0.25 + d;
        let single = (1.0 - 3.0 * tr2) / (1.0 + SQRT3 * s);
        let l = [triple, triple, triple, single];
        Candidate::with_lambdas(x, l, [d, d, d, -3.0 * d], labels, Branch::DoubleZeroCase2)
    };
    Ok(cand)
}

/// Eigenvalues from characteristic coefficients, descending.
pub fn quartic_eigs(c: &CharCoeffs) -> Result<QuarticSpectrum> {
    // b-derived centered coefficients carry about ε of absolute noise, which
    // is ε/σ⁴ relative to the quartic term.
    let x = CenteredCoeffs::from_char(c);
    let sigma = root_scale(&x);
    let noise = if sigma > 0.0 {
        4.0 * f64::EPSILON / sigma.powi(4)
    } else {
        0.0
    };
    solve(c, &x, f64::EPSILON, tol::RESIDUAL_PREFERENCE.max(noise))
}

/// Eigenvalues from coefficients of Ω − I/4, descending. Prefer this when
/// the matrix is at hand: it resolves spectra clustered around ¼.
pub fn quartic_eigs_centered(x: &CenteredCoeffs) -> Result<QuarticSpectrum> {
    // Entries of Ω − I/4 carry about ε/4 of absolute noise, so relative
    // coefficient mismatches below ~ε/σ cannot tell candidates apart.
    let sigma = root_scale(x);
    let noise = if sigma > 0.0 {
        4.0 * f64::EPSILON / sigma
    } else {
        0.0
    };
    solve(&x.to_char(), x, 0.0, tol::RESIDUAL_PREFERENCE.max(noise))
}

/// `e2_floor` is the |e₂| below which Ω is taken to be exactly I/4.
fn solve(
    c: &CharCoeffs,
    x: &CenteredCoeffs,
    e2_floor: f64,
    preference: f64,
) -> Result<QuarticSpectrum> {
    let (c1, c2) = centered_resolvent(x)?;
    if c1 <= tol::BRANCH && c2.abs() > tol::BRANCH {
        log::warn!("c1 = {c1:e} vanishes but c2 = {c2:e} does not; coefficients {c:?}");
        return Err(Error::InternalInconsistency(format!(
            "c1 = {c1:e} at the branch tolerance while c2 = {c2:e} is not"
        )));
    }

    let mut branch_err = None;
    let branch_candidate = if c1 <= tol::NEAR_BRANCH && c2.abs() <= tol::BRANCH {
        // A triple root a little away from ¼ has a purity only quadratically
        // close to ¼, so the all-quarter pattern needs e₂ itself to vanish.
        if (c.tr2 - 0.25).abs() <= tol::BRANCH && x.e2.abs() <= e2_floor {
            Some(Candidate::new(
                x,
                [0.0; 4],
                [RootLabel::Quarter; 4],
                Branch::AllQuarter,
            ))
        } else {
            match double_zero(x) {
                Ok(cand) => Some(cand),
                Err(e) => {
                    branch_err = Some(e);
                    None
                }
            }
        }
    } else if c2.abs() <= tol::BRANCH {
        match ferrari_roots(x, 0.0) {
            Ok(l) => Some(Candidate::new(x, l, FERRARI_LABELS, Branch::C2Zero)),
            Err(e) => {
                branch_err = Some(e);
                None
            }
        }
    } else {
        None
    };

    let mut generic_err = None;
    let generic = match angle(c1, c2) {
        Some(phi) if c1 > 0.0 => match ferrari_roots(x, c1 * phi.cos()) {
            Ok(l) => Some(Candidate::new(x, l, FERRARI_LABELS, Branch::Generic)),
            Err(e) => {
                generic_err = Some(e);
                None
            }
        },
        _ => None,
    };

    let chosen = match (branch_candidate, generic) {
        (Some(b), Some(g)) => {
            if g.mismatch + preference < b.mismatch {
                g
            } else {
                b
            }
        }
        (Some(b), None) => b,
        (None, Some(g)) => g,
        (None, None) => {
            return Err(generic_err.or(branch_err).unwrap_or_else(|| {
                Error::InternalInconsistency("no closed-form branch applies".into())
            }))
        }
    };

    let residual = chosen
        .lambdas
        .iter()
        .map(|&l| c.eval(l).abs())
        .fold(0.0, f64::max);
    if !(residual <= tol::RESIDUAL_FAIL) {
        log::warn!("closed-form residual {residual:e} for {c:?}");
        return Err(Error::InternalInconsistency(format!(
            "closed-form residual {residual:e} on branch {}",
            chosen.branch
        )));
    }

    let mut order = [0usize, 1, 2, 3];
    order.sort_by(|&i, &j| chosen.lambdas[j].total_cmp(&chosen.lambdas[i]));
    Ok(QuarticSpectrum {
        lambdas: order.map(|i| chosen.lambdas[i]),
        labels: order.map(|i| chosen.labels[i]),
        branch: chosen.branch,
        residual,
    })
}

/// The right-hand side of the explicit positivity condition
///
/// ```text
/// 1 ≥ (1/√3)(4t − 1 + 8c₁cosφ)^½ + (2/√6)[4t − 1 − 4c₁cosφ + 3√3(1 + 8b₁ − 2t)/(4t − 1 + 8c₁cosφ)^½]^½
/// ```
///
/// which is 1 − 4λ⁻(−). `shift` is c₁cosφ, or zero on the c₂ = 0 branch.
pub(crate) fn positivity_rhs(b1: f64, tr2: f64, shift: f64) -> Result<f64> {
    let outer = clamp_radicand(4.0 * tr2 - 1.0 + 8.0 * shift, "4t - 1 + 8c1 cos(phi)")?.sqrt();
    if outer == 0.0 {
        return Ok(0.0);
    }
    let inner = 4.0 * tr2 - 1.0 - 4.0 * shift + 3.0 * SQRT3 * (1.0 + 8.0 * b1 - 2.0 * tr2) / outer;
    Ok(outer / SQRT3 + 2.0 / SQRT6 * clamp_radicand(inner, "lower inner")?.sqrt())
}

/// c₁cosφ on the generic branch, 0 otherwise.
pub(crate) fn resolvent_shift(c: &CharCoeffs, branch: Branch) -> Result<f64> {
    match branch {
        Branch::Generic => {
            let (c1, c2) = resolvent(c)?;
            Ok(angle(c1, c2).map_or(0.0, |phi| c1 * phi.cos()))
        }
        _ => Ok(0.0),
    }
}

/// The three angles φ, φ ± π/3 used by the cubic formulas.
pub(crate) fn third_angles(phi: f64) -> [f64; 3] {
    [phi, phi - FRAC_PI_3, phi + FRAC_PI_3]
}
