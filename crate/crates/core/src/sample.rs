//! Seeded random ensembles used by the test suites, benches and the fuzz
//! command.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::bloch::{BlochTensor, DensityMatrix};
use crate::linalg::{Complex, Matrix4};
use crate::separability::PureState;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// G·G†/Tr(G·G†), G a 4×4 complex Gaussian matrix.
    Ginibre,
    /// Trace-one Hermitian, generally not positive.
    Hermitian,
    /// Haar-random pure states.
    Pure,
    Rank2,
    Rank3,
    /// p·|Φ⁺⟩⟨Φ⁺| + (1 − p)·I/4 with p uniform in [0, 1].
    Werner,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Ginibre,
        Family::Hermitian,
        Family::Pure,
        Family::Rank2,
        Family::Rank3,
        Family::Werner,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ginibre => "ginibre",
            Family::Hermitian => "hermitian",
            Family::Pure => "pure",
            Family::Rank2 => "rank2",
            Family::Rank3 => "rank3",
            Family::Werner => "werner",
        }
    }

    /// Whether samples are positive semidefinite.
    pub fn is_state(self) -> bool {
        self != Family::Hermitian
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownFamily(pub String);

impl fmt::Display for UnknownFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown family '{}'", self.0)
    }
}

impl std::error::Error for UnknownFamily {}

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| UnknownFamily(s.to_string()))
    }
}

/// Independent stream `shard` of the generator seeded with `seed`.
pub fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

pub fn complex_gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    Complex::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// G·G† normalized to unit trace, with G a 4×k Gaussian matrix.
pub fn rank_k_density<R: Rng + ?Sized>(rng: &mut R, k: usize) -> DensityMatrix {
    let g: Vec<[Complex; 4]> = (0..k)
        .map(|_| std::array::from_fn(|_| complex_gaussian(rng)))
        .collect();
    let mut m = Matrix4::zeros();
    for col in &g {
        m = m + Matrix4::outer(col);
    }
    let t = m.trace().re;
    let mut m = m.scale(1.0 / t);
    // Exact Hermiticity and real diagonal.
    m = Matrix4::from_fn(|i, j| (m[(i, j)] + m[(j, i)].conj()) * 0.5);
    DensityMatrix::from_trusted(m)
}

pub fn ginibre_density<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    rank_k_density(rng, 4)
}

/// I/4 + (H − Tr H · I/4)/4 with H = G + G†.
pub fn hermitian_trace_one<R: Rng + ?Sized>(rng: &mut R) -> Matrix4 {
    let g = Matrix4::from_fn(|_, _| complex_gaussian(rng));
    let h = g + g.adjoint();
    let shift = h.trace().re / 4.0;
    let traceless = h - Matrix4::identity().scale(shift);
    let mut m = Matrix4::identity().scale(0.25) + traceless.scale(0.25);
    for i in 0..4 {
        m[(i, i)].im = 0.0;
    }
    m
}

pub fn haar_pure<R: Rng + ?Sized>(rng: &mut R) -> PureState {
    loop {
        let amp: [Complex; 4] = std::array::from_fn(|_| complex_gaussian(rng));
        if let Ok(p) = PureState::normalized(amp) {
            return p;
        }
    }
}

pub fn random_qubit<R: Rng + ?Sized>(rng: &mut R) -> [Complex; 2] {
    loop {
        let a = complex_gaussian(rng);
        let b = complex_gaussian(rng);
        let n = (a.norm_sqr() + b.norm_sqr()).sqrt();
        if n > 0.0 {
            return [a / n, b / n];
        }
    }
}

pub fn werner_random<R: Rng + ?Sized>(rng: &mut R) -> DensityMatrix {
    let p: f64 = rng.random();
    DensityMatrix::werner(p).expect("p drawn from [0, 1)")
}

/// Every a_{μν} except a₀₀ uniform in [−1, 1]. The result is Hermitian and
/// trace one but rarely positive.
pub fn bloch_box<R: Rng + ?Sized>(rng: &mut R) -> BlochTensor {
    let mut a = [[0.0; 4]; 4];
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x = rng.random_range(-1.0..=1.0);
        }
    }
    BlochTensor::new(a).expect("finite coefficients")
}

/// One sample of `family` as a matrix.
pub fn sample_matrix<R: Rng + ?Sized>(rng: &mut R, family: Family) -> Matrix4 {
    match family {
        Family::Ginibre => ginibre_density(rng).into_matrix(),
        Family::Hermitian => hermitian_trace_one(rng),
        Family::Pure => haar_pure(rng).projector(),
        Family::Rank2 => rank_k_density(rng, 2).into_matrix(),
        Family::Rank3 => rank_k_density(rng, 3).into_matrix(),
        Family::Werner => werner_random(rng).into_matrix(),
    }
}
