use std::fmt::Write as _;

use serde::Serialize;
use twoqubit::chain::{chain_lambda_min, critical_noise, max_transfer_distance};
use twoqubit::{tol, TransferDistance};

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sweep {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Sweep {
    /// `start:stop:step`
    pub fn parse(s: &str) -> Result<Self, Failure> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts[..] else {
            return Err(Failure::parse(format!(
                "sweep '{s}' is not start:stop:step"
            )));
        };
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| Failure::parse(format!("sweep '{s}': '{x}' is not a number")))
        };
        let sweep = Self {
            start: num(a)?,
            stop: num(b)?,
            step: num(c)?,
        };
        if !(sweep.step > 0.0) || !(sweep.start <= sweep.stop) || !sweep.stop.is_finite() {
            return Err(Failure::validation(format!(
                "sweep '{s}' needs start <= stop and step > 0"
            )));
        }
        Ok(sweep)
    }

    /// start + k·step for every k that stays below stop (within a relative
    /// slack of 1e-9 steps, so 0:1:0.1 ends at 1).
    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as u64;
        (0..=count)
            .map(|k| self.start + k as f64 * self.step)
            .collect()
    }
}

#[derive(Serialize)]
struct StepRow {
    n: u32,
    lambda_min: f64,
    entangled: bool,
}

#[derive(Serialize)]
struct StepTable {
    q: f64,
    epsilon: f64,
    /// `null` when no noise keeps the pair entangled forever.
    n_max: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    epsilon_critical: Option<f64>,
    rows: Vec<StepRow>,
}

#[derive(Serialize)]
struct SweepRow {
    epsilon: f64,
    n_max: Option<u32>,
}

#[derive(Serialize)]
struct SweepTable {
    q: f64,
    rows: Vec<SweepRow>,
}

fn finite(d: TransferDistance) -> Option<u32> {
    match d {
        TransferDistance::Finite(n) => Some(n),
        TransferDistance::Unbounded => None,
    }
}

fn n_max_text(n: Option<u32>) -> String {
    n.map_or_else(|| "unbounded".to_string(), |n| n.to_string())
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn run(
    q: f64,
    epsilon: Option<f64>,
    n: Option<u32>,
    sweep: Option<&str>,
    csv: bool,
) -> Result<String, Failure> {
    if let Some(range) = sweep {
        let sweep = Sweep::parse(range)?;
        let rows = sweep
            .points()
            .into_iter()
            .map(|eps| {
                let d = max_transfer_distance(q, eps).map_err(Failure::validation)?;
                Ok(SweepRow {
                    epsilon: eps,
                    n_max: finite(d),
                })
            })
            .collect::<Result<Vec<_>, Failure>>()?;
        if !csv {
            return Ok(to_json(&SweepTable { q, rows }));
        }
        let mut s = String::from("epsilon,n_max\n");
        for r in rows {
            let _ = writeln!(s, "{},{}", r.epsilon, n_max_text(r.n_max));
        }
        return Ok(s);
    }

    let epsilon = epsilon.ok_or_else(|| Failure::parse("chain needs --epsilon or --sweep"))?;
    let n_max = finite(max_transfer_distance(q, epsilon).map_err(Failure::validation)?);
    let last = match (n, n_max) {
        (Some(n), _) => n,
        (None, Some(m)) => m.saturating_add(2),
        (None, None) => {
            return Err(Failure::validation(
                "epsilon = 0 never disentangles the pair; pass --n to bound the table",
            ))
        }
    };
    let epsilon_critical = match n {
        Some(n) if n >= 1 && q > 0.0 => Some(critical_noise(q, n).map_err(Failure::validation)?),
        _ => None,
    };
    let rows = (0..=last)
        .map(|k| {
            let l = chain_lambda_min(q, epsilon, k).map_err(Failure::validation)?;
            Ok(StepRow {
                n: k,
                lambda_min: l,
                entangled: l < -tol::SEPARABILITY,
            })
        })
        .collect::<Result<Vec<_>, Failure>>()?;
    if !csv {
        return Ok(to_json(&StepTable {
            q,
            epsilon,
            n_max,
            epsilon_critical,
            rows,
        }));
    }
    let mut s = String::from("n,lambda_min,entangled\n");
    for r in rows {
        let _ = writeln!(s, "{},{},{}", r.n, r.lambda_min, r.entangled);
    }
    Ok(s)
}
