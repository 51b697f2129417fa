//! Rank-deficient spectra: one vanishing eigenvalue leaves the cubic
//! λ³ − λ² + b₂λ + b₁ = 0, two leave a quadratic fixed by the purity alone.

use std::fmt;

use super::quartic::{clamp_radicand, third_angles, vieta_mismatch};
use super::CharCoeffs;
use crate::{tol, Error, Result};

/// Residual cubic after removing a zero root, with d = 2 − 27b₁ − 9b₂.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicCoeffs {
    pub b1: f64,
    pub b2: f64,
    pub tr2: f64,
    pub d: f64,
}

impl CubicCoeffs {
    pub fn new(b1: f64, b2: f64, tr2: f64) -> Self {
        Self {
            b1,
            b2,
            tr2,
            d: 2.0 - 27.0 * b1 - 9.0 * b2,
        }
    }

    /// Requires |b₀| ≤ 1e-10, i.e. a zero eigenvalue.
    pub fn from_quartic(c: &CharCoeffs) -> Result<Self> {
        if c.b0.abs() > 1e-10 {
            return Err(Error::Precondition(format!(
                "b0 = {:e}: no vanishing eigenvalue",
                c.b0
            )));
        }
        Ok(Self::new(c.b1, c.b2, c.tr2))
    }

    pub fn eval(&self, x: f64) -> f64 {
        ((x - 1.0) * x + self.b2) * x + self.b1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubicBranch {
    Generic,
    /// Tr Ω² = 1/3: all three roots equal 1/3.
    AllThird,
    /// d = 0: one root is exactly 1/3.
    DZero,
}

impl CubicBranch {
    pub fn name(self) -> &'static str {
        match self {
            CubicBranch::Generic => "cubic-generic",
            CubicBranch::AllThird => "cubic-all-third",
            CubicBranch::DZero => "cubic-d-zero",
        }
    }
}

impl fmt::Display for CubicBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CubicSpectrum {
    /// Descending.
    pub lambdas: [f64; 3],
    pub branch: CubicBranch,
    /// The trigonometric angle when the generic formulas were used.
    pub phi: Option<f64>,
    pub residual: f64,
}

impl CubicSpectrum {
    pub fn min(&self) -> f64 {
        self.lambdas[2]
    }
}

/// cos 3φ = d / (2(1 − 3b₂)^{3/2}), φ ∈ [0, π/3]. `None` when 1 − 3b₂
/// vanishes.
pub fn cubic_angle(c: &CubicCoeffs) -> Option<f64> {
    let u = (1.0 - 3.0 * c.b2).max(0.0);
    let ratio = c.d / (2.0 * u * u.sqrt());
    if ratio.is_nan() || u == 0.0 {
        return None;
    }
    Some(ratio.clamp(-1.0, 1.0).acos() / 3.0)
}

/// λ₁ = ⅓(1 + r cos φ), λ₂ = ⅓(1 − r cos(φ − π/3)), λ₃ = ⅓(1 − r cos(φ + π/3))
/// with r = √(6 Tr Ω² − 2).
fn trig_roots(tr2: f64, phi: f64) -> Result<[f64; 3]> {
    let r = clamp_radicand(6.0 * tr2 - 2.0, "6t - 2")?.sqrt();
    let [a, b, c] = third_angles(phi);
    Ok([
        (1.0 + r * a.cos()) / 3.0,
        (1.0 - r * b.cos()) / 3.0,
        (1.0 - r * c.cos()) / 3.0,
    ])
}

fn residual(c: &CubicCoeffs, l: &[f64; 3]) -> f64 {
    l.iter().map(|&x| c.eval(x).abs()).fold(0.0, f64::max)
}

pub fn cubic_eigs(c: &CubicCoeffs) -> Result<CubicSpectrum> {
    if ![c.b1, c.b2, c.tr2, c.d].iter().all(|x| x.is_finite()) {
        return Err(Error::NonFinite);
    }
    if c.tr2 < 1.0 / 3.0 - 1e-10 {
        return Err(Error::Precondition(format!(
            "Tr Ω² = {} below 1/3 with a vanishing eigenvalue",
            c.tr2
        )));
    }

    let special = if (c.tr2 - 1.0 / 3.0).abs() <= tol::BRANCH {
        Some(([1.0 / 3.0; 3], CubicBranch::AllThird))
    } else if c.d.abs() <= tol::BRANCH {
        let s = (1.5f64).sqrt() * clamp_radicand(3.0 * c.tr2 - 1.0, "3t - 1")?.sqrt();
        Some((
            [(1.0 + s) / 3.0, 1.0 / 3.0, (1.0 - s) / 3.0],
            CubicBranch::DZero,
        ))
    } else {
        None
    };

    let phi = cubic_angle(c);
    let generic = match phi {
        Some(p) => Some(trig_roots(c.tr2, p)?),
        None => None,
    };

    let (lambdas, branch, phi) = match (special, generic) {
        (Some((s, b)), Some(g)) => {
            let want = [1.0, c.b2, -c.b1];
            if vieta_mismatch(&g, &want) + tol::RESIDUAL_PREFERENCE < vieta_mismatch(&s, &want) {
                (g, CubicBranch::Generic, phi)
            } else {
                (s, b, None)
            }
        }
        (Some((s, b)), None) => (s, b, None),
        (None, Some(g)) => (g, CubicBranch::Generic, phi),
        (None, None) => {
            return Err(Error::InternalInconsistency(
                "1 - 3b2 vanishes away from Tr Ω² = 1/3".into(),
            ))
        }
    };

    let mut lambdas = lambdas;
    lambdas.sort_by(|a, b| b.total_cmp(a));
    let res = residual(c, &lambdas);
    if !(res <= tol::RESIDUAL_FAIL) {
        return Err(Error::InternalInconsistency(format!(
            "cubic residual {res:e} on branch {branch}"
        )));
    }
    Ok(CubicSpectrum {
        lambdas,
        branch,
        phi,
        residual: res,
    })
}

/// The two non-zero eigenvalues when two vanish: ½(1 ± √(2 Tr Ω² − 1)).
pub fn rank2_eigs(tr2: f64) -> Result<[f64; 2]> {
    if !tr2.is_finite() {
        return Err(Error::NonFinite);
    }
    if !(0.5 - 1e-10..=1.0 + 1e-10).contains(&tr2) {
        return Err(Error::OutOfRange {
            name: "Tr Ω²",
            value: tr2,
            range: "[1/2, 1]",
        });
    }
    let s = (2.0 * tr2 - 1.0).max(0.0).sqrt();
    // ½(1 − s) rewritten as (1 − Tr Ω²)/(1 + s).
    Ok([0.5 * (1.0 + s), (1.0 - tr2) / (1.0 + s)])
}

/// Σλ² ≥ 1/m, and Σλ² ≤ 1 when no eigenvalue is negative. `m = 0` never
/// passes.
pub fn purity_bound_check(lambdas: &[f64], m: usize) -> bool {
    let s: f64 = lambdas.iter().map(|x| x * x).sum();
    if m == 0 || s < 1.0 / m as f64 - 1e-10 {
        return false;
    }
    if lambdas.iter().all(|&x| x >= 0.0) {
        return s <= 1.0 + 1e-10;
    }
    true
}
