//! JSON density matrix input: `{"dimA": 2, "dimB": 2, "re": [[..]], "im": [[..]]}`.
//! `im` may be omitted for real matrices.

use std::path::Path;

use erae_core::{ComplexMatrix, DensityMatrix};
use num_complex::Complex64;
use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Deserialize)]
#[serde(rename_all = "camelCase")]
struct MatrixFile {
    dim_a: usize,
    dim_b: usize,
    re: Vec<Vec<f64>>,
    #[serde(default)]
    im: Option<Vec<Vec<f64>>>,
}

pub fn read(path: &Path) -> Result<DensityMatrix, CliError> {
    let bad = |msg: String| CliError::File {
        path: path.display().to_string(),
        msg,
    };
    let text = std::fs::read_to_string(path).map_err(|e| bad(e.to_string()))?;
    let file: MatrixFile = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    let n = file.dim_a * file.dim_b;
    if n == 0 {
        return Err(bad("dimA and dimB must be positive".into()));
    }
    let square = |m: &[Vec<f64>]| m.len() == n && m.iter().all(|r| r.len() == n);
    if !square(&file.re) {
        return Err(bad(format!("re must be {n}x{n}")));
    }
    if let Some(im) = &file.im {
        if !square(im) {
            return Err(bad(format!("im must be {n}x{n}")));
        }
    }
    let m = ComplexMatrix::from_fn(n, n, |i, j| {
        let im = file.im.as_ref().map_or(0.0, |im| im[i][j]);
        Complex64::new(file.re[i][j], im)
    });
    Ok(DensityMatrix::new(m, file.dim_a, file.dim_b)?)
}
