//! Closed forms against the Jacobi oracle on seeded random samples.
//!
//! Samples are split into shards of [`SHARD_SIZE`]; shard `s` draws from
//! `shard_rng(seed, s)`, so a counterexample is reproducible from
//! `(seed, shard, index)` whatever the thread count.

use rayon::prelude::*;
use serde::Serialize;
use twoqubit::bloch::partial_transpose;
use twoqubit::entanglement::{concurrence, negativity};
use twoqubit::linalg::eig_hermitian_oracle;
use twoqubit::sample::{haar_pure, sample_matrix, shard_rng, Family};
use twoqubit::separability::{peres_test, pure_pt_spectrum};
use twoqubit::spectrum::{coeffs_from_traces, cubic_eigs, eigenvalues, rank2_eigs};
use twoqubit::{tol, CubicCoeffs, DensityMatrix, Matrix4, PureState};

use crate::input::MatrixFile;
use crate::Failure;

pub const SHARD_SIZE: u64 = 256;
const MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct Tolerances {
    pub eigenvalue: f64,
    pub pt_eigenvalue: f64,
    pub rank_route: f64,
    pub pure_pt: f64,
    pub concurrence: f64,
    pub verdict_band: f64,
}

pub const TOLERANCES: Tolerances = Tolerances {
    eigenvalue: 1e-9,
    pt_eigenvalue: 1e-9,
    rank_route: 1e-9,
    pure_pt: 1e-12,
    concurrence: 1e-10,
    verdict_band: tol::SEPARABILITY,
};

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub shard: u64,
    pub index: u64,
    pub check: &'static str,
    pub detail: String,
    pub input: MatrixFile,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzSummary {
    pub family: String,
    pub samples: u64,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub max_eigenvalue_error: f64,
    pub max_pt_eigenvalue_error: f64,
    /// rank2, rank3 and pure only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rank_route_error: Option<f64>,
    /// pure only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_concurrence_error: Option<f64>,
    pub verdict_disagreements: u64,
    /// States only; the hermitian family has no concurrence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure_disagreements: Option<u64>,
    pub marginal_samples: u64,
    pub failures: u64,
    pub counterexamples: Vec<Counterexample>,
    pub pass: bool,
}

#[derive(Default)]
struct Tally {
    eig: f64,
    pt: f64,
    rank_route: f64,
    conc: f64,
    verdict: u64,
    measure: u64,
    marginal: u64,
    failures: u64,
    examples: Vec<Counterexample>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.eig = self.eig.max(other.eig);
        self.pt = self.pt.max(other.pt);
        self.rank_route = self.rank_route.max(other.rank_route);
        self.conc = self.conc.max(other.conc);
        self.verdict += other.verdict;
        self.measure += other.measure;
        self.marginal += other.marginal;
        self.failures += other.failures;
        self.examples.extend(other.examples);
        self.examples.truncate(MAX_COUNTEREXAMPLES);
        self
    }
}

fn max_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// One check's outcome: its error (infinite when the closed form failed)
/// and a description for the counterexample dump.
struct Finding {
    check: &'static str,
    error: f64,
    limit: f64,
    detail: String,
}

fn compare(
    check: &'static str,
    closed: twoqubit::Result<Vec<f64>>,
    oracle: &[f64],
    limit: f64,
) -> Finding {
    match closed {
        Ok(v) => {
            let error = max_diff(&v, oracle);
            Finding {
                check,
                error,
                limit,
                detail: format!("closed form {v:?}, oracle {oracle:?}"),
            }
        }
        Err(e) => Finding {
            check,
            error: f64::INFINITY,
            limit,
            detail: e.to_string(),
        },
    }
}

fn rank_route(family: Family, m: &Matrix4) -> twoqubit::Result<Vec<f64>> {
    let c = coeffs_from_traces(m)?;
    match family {
        Family::Rank2 => {
            let [hi, lo] = rank2_eigs(c.tr2)?;
            Ok(vec![hi, lo, 0.0, 0.0])
        }
        _ => {
            let [a, b, d] = cubic_eigs(&CubicCoeffs::from_quartic(&c)?)?.lambdas;
            Ok(vec![a, b, d, 0.0])
        }
    }
}

fn check_sample(
    family: Family,
    m: &Matrix4,
    psi: Option<&PureState>,
    tally: &mut Tally,
) -> Vec<Finding> {
    let t = TOLERANCES;
    let mut out = Vec::new();
    let oracle = match eig_hermitian_oracle(m) {
        Ok(v) => v,
        Err(e) => {
            out.push(Finding {
                check: "oracle",
                error: f64::INFINITY,
                limit: 0.0,
                detail: e.to_string(),
            });
            return out;
        }
    };
    let closed = eigenvalues(m).map(|s| s.lambdas.to_vec());
    out.push(compare("eigenvalues", closed, &oracle, t.eigenvalue));

    let pt_oracle = match eig_hermitian_oracle(&partial_transpose(m)) {
        Ok(v) => v,
        Err(e) => {
            out.push(Finding {
                check: "oracle",
                error: f64::INFINITY,
                limit: 0.0,
                detail: e.to_string(),
            });
            return out;
        }
    };
    let rho = match DensityMatrix::hermitian_trace_one(*m) {
        Ok(r) => r,
        Err(e) => {
            out.push(Finding {
                check: "input",
                error: f64::INFINITY,
                limit: 0.0,
                detail: e.to_string(),
            });
            return out;
        }
    };
    let report = peres_test(&rho);
    out.push(compare(
        "pt-eigenvalues",
        report
            .as_ref()
            .map(|r| r.pt_spectrum.to_vec())
            .map_err(Clone::clone),
        &pt_oracle,
        t.pt_eigenvalue,
    ));

    let oracle_min = pt_oracle[3];
    let outside_band = oracle_min.abs() > t.verdict_band;
    if !outside_band {
        tally.marginal += 1;
    }
    if let Ok(r) = &report {
        let oracle_separable = oracle_min >= 0.0;
        if outside_band && r.separable != oracle_separable {
            tally.verdict += 1;
            out.push(Finding {
                check: "verdict",
                error: f64::INFINITY,
                limit: 0.0,
                detail: format!(
                    "closed form separable = {}, oracle min PT eigenvalue {oracle_min:e}",
                    r.separable
                ),
            });
        }
        if family.is_state() && outside_band {
            match (concurrence(&rho), negativity(&rho)) {
                (Ok(c), Ok(n)) => {
                    let ent = !r.separable;
                    if (c > t.verdict_band) != ent || (n > t.verdict_band) != ent {
                        tally.measure += 1;
                        out.push(Finding {
                            check: "measures",
                            error: f64::INFINITY,
                            limit: 0.0,
                            detail: format!(
                                "concurrence {c:e}, negativity {n:e}, separable = {}",
                                r.separable
                            ),
                        });
                    }
                }
                (Err(e), _) | (_, Err(e)) => out.push(Finding {
                    check: "measures",
                    error: f64::INFINITY,
                    limit: 0.0,
                    detail: e.to_string(),
                }),
            }
        }
    }

    match family {
        Family::Rank2 | Family::Rank3 => {
            out.push(compare(
                "rank-route",
                rank_route(family, m),
                &oracle,
                t.rank_route,
            ));
        }
        Family::Pure => {
            let psi = psi.expect("pure samples carry their amplitudes");
            out.push(compare(
                "pure-pt",
                Ok(pure_pt_spectrum(psi).to_vec()),
                &pt_oracle,
                t.pure_pt,
            ));
            let want = 2.0 * psi.q();
            let c = concurrence(&rho).map(|c| vec![c]);
            out.push(compare("concurrence", c, &[want], t.concurrence));
        }
        _ => {}
    }
    out
}

fn run_shard(family: Family, seed: u64, shard: u64, count: u64) -> Tally {
    let mut rng = shard_rng(seed, shard);
    let mut tally = Tally::default();
    for index in 0..count {
        let (m, psi) = if family == Family::Pure {
            let psi = haar_pure(&mut rng);
            (psi.projector(), Some(psi))
        } else {
            (sample_matrix(&mut rng, family), None)
        };
        let findings = check_sample(family, &m, psi.as_ref(), &mut tally);
        let mut failed = false;
        for f in findings {
            match f.check {
                "eigenvalues" => tally.eig = tally.eig.max(f.error),
                "pt-eigenvalues" => tally.pt = tally.pt.max(f.error),
                "rank-route" | "pure-pt" => tally.rank_route = tally.rank_route.max(f.error),
                "concurrence" => tally.conc = tally.conc.max(f.error),
                _ => {}
            }
            if !(f.error <= f.limit) {
                failed = true;
                if tally.examples.len() < MAX_COUNTEREXAMPLES {
                    let input = match &psi {
                        Some(p) => MatrixFile {
                            pure: Some(p.amplitudes().map(|z| [z.re, z.im])),
                            ..MatrixFile::default()
                        },
                        None => MatrixFile::from_matrix(&m),
                    };
                    tally.examples.push(Counterexample {
                        shard,
                        index,
                        check: f.check,
                        detail: f.detail,
                        input,
                    });
                }
            }
        }
        if failed {
            tally.failures += 1;
        }
    }
    tally
}

pub fn fuzz(samples: u64, seed: u64, family: Family) -> Result<FuzzSummary, Failure> {
    if samples == 0 {
        return Err(Failure::validation("--samples must be at least 1"));
    }
    let shards = samples.div_ceil(SHARD_SIZE);
    let tally = (0..shards)
        .into_par_iter()
        .map(|s| {
            let count = SHARD_SIZE.min(samples - s * SHARD_SIZE);
            run_shard(family, seed, s, count)
        })
        .reduce(Tally::default, Tally::merge);
    let has_rank_route = matches!(family, Family::Rank2 | Family::Rank3 | Family::Pure);
    Ok(FuzzSummary {
        family: family.name().to_string(),
        samples,
        seed,
        tolerances: TOLERANCES,
        max_eigenvalue_error: tally.eig,
        max_pt_eigenvalue_error: tally.pt,
        max_rank_route_error: has_rank_route.then_some(tally.rank_route),
        max_concurrence_error: (family == Family::Pure).then_some(tally.conc),
        verdict_disagreements: tally.verdict,
        measure_disagreements: family.is_state().then_some(tally.measure),
        marginal_samples: tally.marginal,
        failures: tally.failures,
        pass: tally.failures == 0,
        counterexamples: tally.examples,
    })
}

pub fn run(samples: u64, seed: u64, family: Family) -> Result<String, Failure> {
    let summary = fuzz(samples, seed, family)?;
    let mut s = serde_json::to_string_pretty(&summary).expect("plain data serializes");
    s.push('\n');
    if summary.pass {
        Ok(s)
    } else {
        Err(Failure::breach(
            format!(
                "{} of {} {} samples breached a tolerance; see counterexamples",
                summary.failures, summary.samples, summary.family
            ),
            s,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shard_layout_covers_every_sample() {
        let s = fuzz(SHARD_SIZE + 3, 5, Family::Werner).unwrap();
        assert_eq!(s.samples, SHARD_SIZE + 3);
        assert!(s.pass, "{s:?}");
    }

    #[test]
    fn zero_samples_rejected() {
        assert_eq!(fuzz(0, 1, Family::Pure).unwrap_err().code, 2);
    }
}
