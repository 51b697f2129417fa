use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twoqubit::entanglement::entanglement_report;
use twoqubit::separability::peres_test;
use twoqubit::spectrum::eigenvalues;
use twoqubit::DensityMatrix;

use crate::input::MatrixFile;
use crate::Failure;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnalysisOutput {
    pub eigenvalues: [f64; 4],
    pub branch: String,
    pub bloch: [[f64; 4]; 4],
    pub purity: f64,
    pub pt_eigenvalues: [f64; 4],
    pub separable: bool,
    pub marginal: bool,
    pub concurrence: f64,
    pub eof: f64,
    pub negativity: f64,
    pub eof_upper_bound: Option<f64>,
}

pub fn analyze(rho: &DensityMatrix) -> Result<AnalysisOutput, Failure> {
    let sp = eigenvalues(rho.matrix()).map_err(Failure::numeric)?;
    let sep = peres_test(rho).map_err(Failure::numeric)?;
    let ent = entanglement_report(rho).map_err(Failure::numeric)?;
    Ok(AnalysisOutput {
        eigenvalues: sp.lambdas,
        branch: sp.route.name().to_string(),
        bloch: *rho.bloch().as_array(),
        purity: rho.purity(),
        pt_eigenvalues: sep.pt_spectrum,
        separable: sep.separable,
        marginal: sep.marginal,
        concurrence: ent.concurrence,
        eof: ent.eof,
        negativity: ent.negativity,
        eof_upper_bound: ent.eof_upper_bound,
    })
}

pub fn run(path: &Path, json: bool) -> Result<String, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("cannot read {}: {e}", path.display())))?;
    let rho = MatrixFile::parse(&text)?.density()?;
    let out = analyze(&rho)?;
    if json {
        let mut s = serde_json::to_string_pretty(&out).expect("plain data serializes");
        s.push('\n');
        Ok(s)
    } else {
        Ok(render_text(&out))
    }
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(f64::to_string).collect::<Vec<_>>().join(" ")
}

fn render_text(o: &AnalysisOutput) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "eigenvalues:     {}", list(&o.eigenvalues));
    let _ = writeln!(s, "branch:          {}", o.branch);
    let _ = writeln!(s, "purity:          {}", o.purity);
    for (mu, row) in o.bloch.iter().enumerate() {
        let label = if mu == 0 { "bloch:" } else { "" };
        let _ = writeln!(s, "{label:<17}{}", list(row));
    }
    let _ = writeln!(s, "pt eigenvalues:  {}", list(&o.pt_eigenvalues));
    let _ = writeln!(s, "separable:       {}", o.separable);
    let _ = writeln!(s, "marginal:        {}", o.marginal);
    let _ = writeln!(s, "concurrence:     {}", o.concurrence);
    let _ = writeln!(s, "eof:             {}", o.eof);
    let _ = writeln!(s, "negativity:      {}", o.negativity);
    let bound = o
        .eof_upper_bound
        .map_or_else(|| "n/a (rank deficient)".to_string(), |b| b.to_string());
    let _ = writeln!(s, "eof upper bound: {bound}");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn maximally_mixed_is_all_quarter_and_separable() {
        let o = analyze(&DensityMatrix::maximally_mixed()).unwrap();
        assert_eq!(o.eigenvalues, [0.25; 4]);
        assert_eq!(o.branch, "all-quarter");
        assert!(o.separable);
        assert_eq!(o.concurrence, 0.0);
    }

    #[test]
    fn json_round_trip_is_lossless() {
        let rho = DensityMatrix::werner(0.7).unwrap();
        let o = analyze(&rho).unwrap();
        let back: AnalysisOutput =
            serde_json::from_str(&serde_json::to_string(&o).unwrap()).unwrap();
        assert_eq!(back, o);
    }
}
