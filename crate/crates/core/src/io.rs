//! Text formats shared by the library and the CLI.
//!
//! Matrices are JSON documents `{"rows": [[[re, im], ...], ...]}`. Reals are
//! written with `serde_json`'s shortest round-trip representation, so a
//! value read back is bit-identical to the one written.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{SquareMatrix, C64};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub rows: Vec<Vec<[f64; 2]>>,
}

impl<const N: usize> From<&SquareMatrix<N>> for MatrixDoc {
    fn from(m: &SquareMatrix<N>) -> Self {
        MatrixDoc {
            rows: m.rows().iter().map(|r| r.iter().map(|z| [z.re, z.im]).collect()).collect(),
        }
    }
}

impl MatrixDoc {
    pub fn to_matrix<const N: usize>(&self) -> Result<SquareMatrix<N>> {
        if self.rows.len() != N || self.rows.iter().any(|r| r.len() != N) {
            return Err(Error::Parse(format!("expected a {N}x{N} matrix")));
        }
        let m = SquareMatrix::<N>::from_fn(|i, j| {
            let [re, im] = self.rows[i][j];
            C64::new(re, im)
        });
        if !m.is_finite() {
            return Err(Error::Parse("matrix entries must be finite".into()));
        }
        Ok(m)
    }
}

pub fn matrix_to_json<const N: usize>(m: &SquareMatrix<N>) -> String {
    serde_json::to_string_pretty(&MatrixDoc::from(m)).expect("matrix serializes")
}

pub fn matrix_from_json<const N: usize>(text: &str) -> Result<SquareMatrix<N>> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    doc.to_matrix()
}

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
        _ => Error::Io(e),
    })
}

pub fn read_matrix<const N: usize>(path: &Path) -> Result<SquareMatrix<N>> {
    matrix_from_json(&read_text(path)?)
}

pub fn write_matrix<const N: usize>(path: &Path, m: &SquareMatrix<N>) -> Result<()> {
    fs::write(path, matrix_to_json(m))?;
    Ok(())
}

/// Real number with 12 significant digits, trailing zeros trimmed.
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    let s = if (-5..15).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        let s = format!("{x:.11e}");
        match s.split_once('e') {
            Some((mant, e)) => format!("{}e{e}", trim_zeros(mant.to_string())),
            None => s,
        }
    };
    if s == "-0" { "0".to_string() } else { s }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

pub fn fmt_complex(z: C64) -> String {
    let (re, im) = (fmt_real(z.re), fmt_real(z.im));
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if z.im < 0.0 => format!("{re}-{}i", fmt_real(-z.im)),
        _ => format!("{re}+{im}i"),
    }
}
