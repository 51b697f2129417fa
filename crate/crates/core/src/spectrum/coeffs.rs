use crate::bloch::BlochTensor;
use crate::linalg::{charpoly_flv, trace_power, Matrix4, MonicQuartic};
use crate::{tol, Error, Result};

/// Coefficients of the trace-one characteristic polynomial
/// b₀ + b₁λ + b₂λ² − λ³ + λ⁴, together with the purity Tr Ω².
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharCoeffs {
    pub b0: f64,
    pub b1: f64,
    pub b2: f64,
    pub tr2: f64,
}

impl CharCoeffs {
    pub fn polynomial(&self) -> MonicQuartic {
        MonicQuartic {
            c0: self.b0,
            c1: self.b1,
            c2: self.b2,
            c3: -1.0,
        }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.polynomial().eval(x)
    }

    /// Largest coefficient-wise difference, purity included.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        [
            self.b0 - other.b0,
            self.b1 - other.b1,
            self.b2 - other.b2,
            self.tr2 - other.tr2,
        ]
        .iter()
        .fold(0.0, |acc, x| acc.max(x.abs()))
    }
}

/// Coefficients of the characteristic polynomial of X = Ω − I/4,
///
/// ```text
/// μ⁴ + e₂μ² − e₃μ + e₄,   μ = λ − ¼
/// ```
///
/// with e_k the elementary symmetric functions of the shifted roots. Taken
/// from X directly they keep full relative precision near Ω = I/4, where
/// b₀, b₁, b₂ only resolve the spectrum to about √ε.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CenteredCoeffs {
    pub e2: f64,
    pub e3: f64,
    pub e4: f64,
}

impl CenteredCoeffs {
    /// Expands (λ − ¼)⁴ + e₂(λ − ¼)² − e₃(λ − ¼) + e₄ backwards.
    pub fn from_char(c: &CharCoeffs) -> Self {
        let e2 = -(c.tr2 - 0.25) / 2.0;
        let e3 = -1.0 / 16.0 - e2 / 2.0 - c.b1;
        let e4 = c.b0 - 1.0 / 256.0 - e2 / 16.0 - e3 / 4.0;
        Self { e2, e3, e4 }
    }

    pub fn to_char(&self) -> CharCoeffs {
        let Self { e2, e3, e4 } = *self;
        CharCoeffs {
            b0: 1.0 / 256.0 + e2 / 16.0 + e3 / 4.0 + e4,
            b1: -1.0 / 16.0 - e2 / 2.0 - e3,
            b2: 0.375 + e2,
            tr2: 0.25 - 2.0 * e2,
        }
    }
}

fn check_trace_one_hermitian(m: &Matrix4) -> Result<()> {
    if !m.is_finite() {
        return Err(Error::NonFinite);
    }
    let dev = m.hermitian_deviation();
    if dev > tol::HERMITIAN {
        return Err(Error::NotHermitian(dev));
    }
    let tr = m.trace().re;
    if (tr - 1.0).abs() > tol::TRACE {
        return Err(Error::WrongTrace(tr));
    }
    Ok(())
}

/// b₀, b₁, b₂ from the Faddeev–LeVerrier recurrence and Tr Ω² from the
/// matrix itself. This is the reference path.
pub fn coeffs_from_traces(m: &Matrix4) -> Result<CharCoeffs> {
    check_trace_one_hermitian(m)?;
    let p = charpoly_flv(m);
    Ok(CharCoeffs {
        b0: p.c0,
        b1: p.c1,
        b2: p.c2,
        tr2: trace_power(m, 2).re,
    })
}

/// Faddeev–LeVerrier on Ω − I/4.
pub fn centered_from_traces(m: &Matrix4) -> Result<CenteredCoeffs> {
    check_trace_one_hermitian(m)?;
    let p = charpoly_flv(&(*m - Matrix4::identity().scale(0.25)));
    Ok(CenteredCoeffs {
        e2: p.c2,
        e3: -p.c1,
        e4: p.c0,
    })
}

type Vec3 = [f64; 3];
type Mat3 = [[f64; 3]; 3];

fn dot(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross(u: Vec3, v: Vec3) -> Vec3 {
    [
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    ]
}

fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [dot(m[0], v), dot(m[1], v), dot(m[2], v)]
}

fn mat_t_vec(m: &Mat3, v: Vec3) -> Vec3 {
    let mut out = [0.0; 3];
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            out[j] += x * v[i];
        }
    }
    out
}

fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn trace3(m: &Mat3) -> f64 {
    m[0][0] + m[1][1] + m[2][2]
}

/// Scalar invariants of a Bloch tensor that enter the coefficient formulas.
#[derive(Clone, Copy, Debug)]
pub(crate) struct BlochInvariants {
    pub purity: f64,
    /// (a⃗₁ × a⃗₂)·a⃗₃ = det A
    pub triple: f64,
    /// ((Tr A)² − Tr A²) ξ_A·ξ_B + 2 ξ_Bᵀ A² ξ_A − 2 Tr A ξ_Bᵀ A ξ_A
    pub mixed: f64,
    /// ξ_Aᵀ A ξ_B
    pub bilinear: f64,
    /// 1 − ξ_A²ξ_B² − (Aᵀξ_A)² − (Aξ_B)² − Σ|a⃗_i × a⃗_j|²
    pub rest: f64,
}

impl BlochInvariants {
    pub fn of(t: &BlochTensor) -> Self {
        let xa = t.xi_a();
        let xb = t.xi_b();
        let a = t.correlation();
        let a2 = mat_mul(&a, &a);
        let tr_a = trace3(&a);
        let rows = [a[0], a[1], a[2]];
        let c12 = cross(rows[0], rows[1]);
        let c23 = cross(rows[1], rows[2]);
        let c31 = cross(rows[2], rows[0]);
        let triple = dot(c12, rows[2]);
        let at_xa = mat_t_vec(&a, xa);
        let a_xb = mat_vec(&a, xb);
        let mixed = (tr_a * tr_a - trace3(&a2)) * dot(xa, xb) + 2.0 * dot(xb, mat_vec(&a2, xa))
            - 2.0 * tr_a * dot(xb, mat_vec(&a, xa));
        let rest = 1.0
            - dot(xa, xa) * dot(xb, xb)
            - dot(at_xa, at_xa)
            - dot(a_xb, a_xb)
            - dot(c12, c12)
            - dot(c23, c23)
            - dot(c31, c31);
        Self {
            purity: t.purity(),
            triple,
            mixed,
            bilinear: dot(xa, mat_vec(&a, xb)),
            rest,
        }
    }
}

/// b₀, b₁, b₂ evaluated directly from the Bloch parameters:
///
/// ```text
/// b₀ = 1/64 [1 − ξ_A²ξ_B² − |Aᵀξ_A|² − |Aξ_B|² + 2ξ_AᵀAξ_B
///            + ((TrA)² − TrA²) ξ_A·ξ_B + 2ξ_BᵀA²ξ_A − 2TrA ξ_BᵀAξ_A
///            − |a⃗₁×a⃗₂|² − |a⃗₂×a⃗₃|² − |a⃗₃×a⃗₁|² − 2(a⃗₁×a⃗₂)·a⃗₃]
///      − 1/16 [TrΩ² − (TrΩ²)²]
/// b₁ = 1/8 [2TrΩ² − 1 − ξ_AᵀAξ_B + (a⃗₁×a⃗₂)·a⃗₃]
/// b₂ = ½ (1 − TrΩ²)
/// ```
///
/// with Tr Ω² = ¼ Σ a_{μν}². The squared norm written "(Aξ_A)²" in the
/// usual presentation is |Aᵀξ_A|², i.e. ξ_A multiplies A from the left; see
/// `ERRATA.md`.
pub fn coeffs_from_bloch(t: &BlochTensor) -> CharCoeffs {
    let inv = BlochInvariants::of(t);
    let tr2 = inv.purity;
    let b0 = (inv.rest + 2.0 * inv.bilinear + inv.mixed - 2.0 * inv.triple) / 64.0
        - (tr2 - tr2 * tr2) / 16.0;
    let b1 = (2.0 * tr2 - 1.0 - inv.bilinear + inv.triple) / 8.0;
    let b2 = 0.5 * (1.0 - tr2);
    CharCoeffs { b0, b1, b2, tr2 }
}
