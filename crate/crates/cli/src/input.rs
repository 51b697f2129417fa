//! The JSON input document for `analyze`.

use serde::{Deserialize, Serialize};
use twoqubit::bloch::from_bloch;
use twoqubit::{BlochTensor, Complex, DensityMatrix, Matrix4, PureState};

use crate::Failure;

/// Exactly one key must be present. Complex entries are `[re, im]` pairs.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<[[[f64; 2]; 4]; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bloch: Option<[[f64; 4]; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure: Option<[[f64; 2]; 4]>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, Failure> {
        let file: MatrixFile = serde_json::from_str(text)
            .map_err(|e| Failure::parse(format!("invalid input: {e}")))?;
        let keys = [
            file.matrix.is_some(),
            file.bloch.is_some(),
            file.pure.is_some(),
        ];
        match keys.iter().filter(|&&k| k).count() {
            1 => Ok(file),
            0 => Err(Failure::parse(
                "input needs one of \"matrix\", \"bloch\" or \"pure\"",
            )),
            _ => Err(Failure::parse(
                "input must contain exactly one of \"matrix\", \"bloch\" or \"pure\"",
            )),
        }
    }

    pub fn from_matrix(m: &Matrix4) -> Self {
        Self {
            matrix: Some(std::array::from_fn(|i| {
                std::array::from_fn(|j| [m[(i, j)].re, m[(i, j)].im])
            })),
            ..Self::default()
        }
    }

    /// The validated state. Positivity is required for every form.
    pub fn density(&self) -> Result<DensityMatrix, Failure> {
        if let Some(rows) = &self.matrix {
            let m = Matrix4::from_fn(|i, j| Complex::new(rows[i][j][0], rows[i][j][1]));
            return DensityMatrix::new(m).map_err(Failure::validation);
        }
        if let Some(a) = &self.bloch {
            let a00 = a[0][0];
            if (a00 - 1.0).abs() > twoqubit::tol::TRACE {
                return Err(Failure::validation(format!(
                    "bloch coefficient a00 = {a00}, expected 1"
                )));
            }
            let t = BlochTensor::new(*a).map_err(Failure::validation)?;
            return DensityMatrix::new(from_bloch(&t)).map_err(Failure::validation);
        }
        if let Some(amp) = &self.pure {
            let amp = amp.map(|[re, im]| Complex::new(re, im));
            return PureState::new(amp)
                .map(|p| p.density())
                .map_err(Failure::validation);
        }
        Err(Failure::parse("empty input"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_or_two_keys() {
        assert_eq!(MatrixFile::parse("{}").unwrap_err().code, 1);
        let two = r#"{"pure": [[1,0],[0,0],[0,0],[0,0]], "bloch": [[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;
        assert_eq!(MatrixFile::parse(two).unwrap_err().code, 1);
        assert_eq!(MatrixFile::parse(r#"{"rho": 1}"#).unwrap_err().code, 1);
    }

    #[test]
    fn a00_is_checked_not_fixed() {
        let f =
            MatrixFile::parse(r#"{"bloch": [[2,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#).unwrap();
        assert_eq!(f.density().unwrap_err().code, 2);
    }

    #[test]
    fn matrix_round_trip() {
        let m = *DensityMatrix::bell_phi_plus().matrix();
        let f = MatrixFile::from_matrix(&m);
        let text = serde_json::to_string(&f).unwrap();
        let back = MatrixFile::parse(&text).unwrap().density().unwrap();
        assert_eq!(*back.matrix(), m);
    }
}
