use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{horner, PolySeries};
use crate::sup::{circle_argmax, GridSpec};

const NEWTON_STEPS: usize = 8;

/// Quantities at a numerical maximum point of `|w|` on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct JackReport {
    pub r: f64,
    pub z0: Complex64,
    /// `z0 w'(z0) / w(z0)`; real and at least `n` at a true maximum.
    pub ratio: Complex64,
    pub n: usize,
    /// `Re(z0 w''(z0) / w'(z0)) + 1`; at least `Re(ratio)` at a true maximum.
    pub curvature_check: f64,
    pub max_modulus: f64,
}

/// Locates the maximum of `|w|` on the circle of radius `r` and reports
/// `z w'/w` and `Re(z w''/w') + 1` there.
///
/// The grid maximum is refined by golden-section search and then polished by
/// Newton steps on `Im(z w'/w)`, which is minus the angular derivative of
/// `log |w|`.
pub fn jack_probe(w: &PolySeries, n: usize, r: f64, grid: &GridSpec) -> Result<JackReport> {
    if w.is_zero() {
        return Err(Error::Input("w is identically zero".into()));
    }
    if n == 0 {
        return Err(Error::Input("leading index n must be at least 1".into()));
    }
    if let Some(k) = w.leading_index().filter(|&k| k < n) {
        return Err(Error::Input(format!("w has a nonzero coefficient at z^{k}, below the leading index {n}")));
    }
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Input(format!("probe radius r = {r} must lie in (0, 1)")));
    }
    grid.validate()?;

    let c0 = w.coeffs();
    let d1 = w.derivative();
    let d2 = d1.derivative();
    let (c1, c2) = (d1.coeffs(), d2.coeffs());

    let peak = circle_argmax(|z| Ok(horner(c0, z).norm()), r, grid.m, grid.refine_depth)?;
    let mut theta = peak.z.arg();
    let mut best = peak.value;

    for _ in 0..NEWTON_STEPS {
        let z = Complex64::from_polar(r, theta);
        let (w0, w1, w2) = (horner(c0, z), horner(c1, z), horner(c2, z));
        let q = w1 / w0;
        let ratio = z * q;
        if ratio.im.abs() <= f64::EPSILON * ratio.norm() {
            break;
        }
        // d/dtheta (z w'/w) = i z (w'/w + z w''/w - z (w'/w)^2)
        let slope = (z * (q + z * w2 / w0 - z * q * q)).re;
        if slope == 0.0 || !slope.is_finite() {
            break;
        }
        let next = theta - ratio.im / slope;
        let value = horner(c0, Complex64::from_polar(r, next)).norm();
        if value < best * (1.0 - 8.0 * f64::EPSILON) {
            break;
        }
        theta = next;
        best = best.max(value);
    }

    let z0 = Complex64::from_polar(r, theta);
    let (w0, w1, w2) = (horner(c0, z0), horner(c1, z0), horner(c2, z0));
    if w1.norm() == 0.0 {
        return Err(Error::Input("w' vanishes at the located maximum".into()));
    }
    Ok(JackReport {
        r,
        z0,
        ratio: z0 * w1 / w0,
        n,
        curvature_check: (z0 * w2 / w1).re + 1.0,
        max_modulus: w0.norm(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(cs: &[f64]) -> PolySeries {
        PolySeries::new(cs.iter().map(|&x| c(x, 0.0)).collect()).unwrap()
    }

    #[test]
    fn monomial_ratio_is_its_degree() {
        for n in 1..5 {
            let w = PolySeries::monomial(c(0.3, 0.4), n).unwrap();
            let rep = jack_probe(&w, n, 0.7, &GridSpec::default()).unwrap();
            assert!((rep.ratio - c(n as f64, 0.0)).norm() < 1e-12);
            assert!((rep.curvature_check - n as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn positive_coefficients_peak_on_the_positive_axis() {
        let rep = jack_probe(&poly(&[0.0, 1.0, 0.5]), 1, 0.9, &GridSpec::default()).unwrap();
        assert!((rep.z0 - c(0.9, 0.0)).norm() < 1e-9);
        assert!(rep.ratio.im.abs() < 1e-9);
        // z w'/w = (1 + 0.9) / (1 + 0.45) at z = 0.9
        assert!((rep.ratio.re - 1.9 / 1.45).abs() < 1e-9);
        assert!(rep.curvature_check >= rep.ratio.re);
    }

    #[test]
    fn alternating_coefficients_peak_on_the_negative_axis() {
        let rep = jack_probe(&poly(&[0.0, 1.0, -0.5]), 1, 0.9, &GridSpec::default()).unwrap();
        assert!((rep.z0 - c(-0.9, 0.0)).norm() < 1e-9);
        assert!(rep.ratio.im.abs() < 1e-9 && rep.ratio.re >= 1.0);
    }

    #[test]
    fn rejects_invalid_inputs() {
        let g = GridSpec::default();
        assert!(jack_probe(&PolySeries::zero(3), 1, 0.5, &g).is_err());
        assert!(jack_probe(&poly(&[0.0, 1.0, 1.0]), 2, 0.5, &g).is_err());
        assert!(jack_probe(&poly(&[1.0, 1.0]), 1, 0.5, &g).is_err());
        assert!(jack_probe(&poly(&[0.0, 1.0]), 1, 1.0, &g).is_err());
    }
}
