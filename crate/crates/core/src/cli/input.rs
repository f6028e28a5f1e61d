//! Function files and command-line literals.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::SeriesA;

/// `{"n": 1, "coeffs": [[re, im], ...]}` listing `a_{n+1}, a_{n+2}, ...`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionSpecFile {
    pub n: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl FunctionSpecFile {
    pub fn from_series(f: &SeriesA) -> Self {
        Self { n: f.n(), coeffs: f.tail().iter().map(|c| [c.re, c.im]).collect() }
    }

    pub fn to_series(&self) -> Result<SeriesA> {
        if self.n == 0 {
            return Err(Error::Input("field `n`: class index must be at least 1".into()));
        }
        if let Some(i) = self.coeffs.iter().position(|[re, im]| !re.is_finite() || !im.is_finite()) {
            return Err(Error::Input(format!("field `coeffs[{i}]`: coefficient is not finite")));
        }
        let tail: Vec<Complex64> = self.coeffs.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        SeriesA::from_tail(self.n, &tail)
    }

    pub fn parse(text: &str) -> Result<SeriesA> {
        let file: FunctionSpecFile = serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))?;
        file.to_series()
    }

    pub fn read(path: &Path) -> Result<SeriesA> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| match e {
            Error::Input(msg) => Error::Input(format!("{}: {msg}", path.display())),
            other => other,
        })
    }
}

/// Parses `a+bi`, `a-bi`, `a`, or `bi`, with optional spaces.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Input(format!("cannot parse complex literal '{text}' (expected a+bi)"));
    let real = |t: &str| t.parse::<f64>().ok().filter(|v| v.is_finite());
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i').or_else(|| s.strip_suffix('j')) else {
        return real(&s).map(|re| Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    let bytes = body.as_bytes();
    // The sign that starts the imaginary part: not leading, not inside an exponent.
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let imag = |t: &str| match t {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        _ => real(t),
    };
    let (re, im) = match split {
        Some(i) => (real(&body[..i]).ok_or_else(bad)?, imag(&body[i..]).ok_or_else(bad)?),
        None => (0.0, imag(body).ok_or_else(bad)?),
    };
    Ok(Complex64::new(re, im))
}
