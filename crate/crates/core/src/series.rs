//! Truncated complex power series.
//!
//! [`PolySeries`] is a dense coefficient vector `c_0, ..., c_M`; [`SeriesA`]
//! wraps one that is normalized as `z + a_{n+1} z^{n+1} + ...`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Roundoff allowance on `|z| <= 1` so that points `r e^{i theta}` with `r = 1`
/// are accepted.
const UNIT_DISK_SLACK: f64 = 1e-12;

pub(crate) fn is_finite(c: Complex64) -> bool {
    c.re.is_finite() && c.im.is_finite()
}

/// Nested evaluation `c_0 + z (c_1 + z (c_2 + ...))`.
#[inline]
pub(crate) fn horner(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
}

/// A truncated power series `sum_{k=0}^{M} c_k z^k` with finite coefficients.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PolySeries {
    coeffs: Vec<Complex64>,
}

impl PolySeries {
    /// Builds a series from `c_0, ..., c_M`. At least one coefficient is required.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Input("a series needs at least the constant coefficient".into()));
        }
        if let Some(k) = coeffs.iter().position(|c| !is_finite(*c)) {
            return Err(Error::Input(format!("coefficient of z^{k} is not finite")));
        }
        Ok(Self { coeffs })
    }

    /// The zero series of truncation order `order`.
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Complex64::new(0.0, 0.0); order + 1] }
    }

    /// `c z^k`, truncated at order `k`.
    pub fn monomial(c: Complex64, k: usize) -> Result<Self> {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub(crate) fn from_coeffs_unchecked(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty());
        Self { coeffs }
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn leading_index(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.re != 0.0 || c.im != 0.0)
    }

    /// Evaluates the series at `z` with `|z| <= 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !is_finite(z) {
            return Err(Error::Input("evaluation point is not finite".into()));
        }
        if z.norm() > 1.0 + UNIT_DISK_SLACK {
            return Err(Error::Input(format!("evaluation point |z| = {} lies outside the closed unit disk", z.norm())));
        }
        Ok(horner(&self.coeffs, z))
    }

    /// Termwise derivative; the result has order `M - 1` (order 0 stays order 0).
    pub fn derivative(&self) -> PolySeries {
        if self.coeffs.len() == 1 {
            return PolySeries::zero(0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        PolySeries { coeffs }
    }
}

impl<'de> Deserialize<'de> for PolySeries {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            coeffs: Vec<Complex64>,
        }
        let raw = Raw::deserialize(deserializer)?;
        PolySeries::new(raw.coeffs).map_err(serde::de::Error::custom)
    }
}

/// A function `f(z) = z + a_{n+1} z^{n+1} + ...` of the normalized class `A_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesA {
    n: usize,
    body: PolySeries,
}

impl<'de> Deserialize<'de> for SeriesA {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            body: PolySeries,
        }
        let raw = Raw::deserialize(deserializer)?;
        SeriesA::new(raw.n, raw.body).map_err(serde::de::Error::custom)
    }
}

impl SeriesA {
    /// Wraps `body`, checking `c_0 = 0`, `c_1 = 1` and `c_2 = ... = c_n = 0`.
    pub fn new(n: usize, body: PolySeries) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("class index n must be at least 1".into()));
        }
        if body.order() < 1 {
            return Err(Error::Input("series must contain the z term".into()));
        }
        if body.coeff(0) != Complex64::new(0.0, 0.0) {
            return Err(Error::Input("coefficient of z^0 must be 0".into()));
        }
        if body.coeff(1) != Complex64::new(1.0, 0.0) {
            return Err(Error::Input("coefficient of z^1 must be 1".into()));
        }
        if let Some(k) = (2..=n.min(body.order())).find(|&k| body.coeff(k) != Complex64::new(0.0, 0.0)) {
            return Err(Error::Input(format!("coefficient of z^{k} must be 0 for a function of class A_{n}")));
        }
        Ok(Self { n, body })
    }

    /// `z + tail[0] z^{n+1} + tail[1] z^{n+2} + ...`
    pub fn from_tail(n: usize, tail: &[Complex64]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Input("class index n must be at least 1".into()));
        }
        let order = if tail.is_empty() { 1 } else { n + tail.len() };
        let mut coeffs = vec![Complex64::new(0.0, 0.0); order + 1];
        coeffs[1] = Complex64::new(1.0, 0.0);
        for (j, &a) in tail.iter().enumerate() {
            coeffs[n + 1 + j] = a;
        }
        Self::new(n, PolySeries::new(coeffs)?)
    }

    /// The identity function `f(z) = z` in `A_n`.
    pub fn identity(n: usize) -> Result<Self> {
        Self::from_tail(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn body(&self) -> &PolySeries {
        &self.body
    }

    /// Coefficients `a_{n+1}, ..., a_M`.
    pub fn tail(&self) -> &[Complex64] {
        let start = (self.n + 1).min(self.body.coeffs.len());
        &self.body.coeffs[start..]
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.body.eval(z)
    }

    /// `f(z) / z`, exact because `c_0 = 0`.
    pub fn divide_by_z(&self) -> PolySeries {
        PolySeries { coeffs: self.body.coeffs[1..].to_vec() }
    }

    /// `f(r z) / r`: maps `a_k` to `a_k r^{k-1}`.
    pub fn scale_radius(&self, r: f64) -> Result<SeriesA> {
        if !(r > 0.0 && r <= 1.0) {
            return Err(Error::Input(format!("radius scale r = {r} must lie in (0, 1]")));
        }
        let mut power = 1.0;
        let mut coeffs = Vec::with_capacity(self.body.coeffs.len());
        coeffs.push(self.body.coeffs[0]);
        for &c in &self.body.coeffs[1..] {
            coeffs.push(c * power);
            power *= r;
        }
        Ok(SeriesA { n: self.n, body: PolySeries { coeffs } })
    }

    /// `z f'(z)`: maps `a_k` to `k a_k`, keeping the class index.
    pub fn to_zfprime(&self) -> SeriesA {
        let coeffs = self
            .body
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| c * k as f64)
            .collect();
        SeriesA { n: self.n, body: PolySeries { coeffs } }
    }
}
