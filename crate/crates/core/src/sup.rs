//! Sup-modulus estimates on circles `|z| = r`.
//!
//! By the maximum principle the supremum of `|g|` over the closed disk
//! `|z| <= r` is attained on the circle, so every estimate here samples the
//! circle only. Polynomials get a certified upper bound from the coefficient
//! sum or from a Lipschitz-padded grid maximum; rational functionals only get
//! the grid value.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{horner, PolySeries};

/// Golden-section iterations per refinement round.
const GOLDEN_ITERS: usize = 16;
/// Tolerance for the nondecreasing check on radial profiles.
pub const PROFILE_MONOTONE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BracketKind {
    /// `upper` is a proven bound.
    Certified,
    /// Only the grid value is known; `upper` is `+inf`.
    GridOnly,
}

/// `lower <= sup_{|z| <= r} |g(z)| <= upper`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupBracket {
    pub lower: f64,
    #[serde(with = "crate::float_serde")]
    pub upper: f64,
    pub r: f64,
    pub kind: BracketKind,
}

impl SupBracket {
    pub fn grid_only(lower: f64, r: f64) -> Self {
        Self { lower, upper: f64::INFINITY, r, kind: BracketKind::GridOnly }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Sampling parameters shared by every circle estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    /// Angular samples per circle.
    pub m: usize,
    /// Radius ladder used by [`disk_sup_profile`] and class-membership scans.
    pub radii: Vec<f64>,
    /// Rounds of local golden-section refinement around the best sample.
    pub refine_depth: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self { m: 4096, radii: default_ladder(), refine_depth: 3 }
    }
}

/// `1 - 2^-k` for `k = 1..=10`.
pub fn default_ladder() -> Vec<f64> {
    (1..=10).map(|k| 1.0 - (0.5f64).powi(k)).collect()
}

impl GridSpec {
    pub fn with_m(m: usize) -> Self {
        Self { m, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.m < 16 {
            return Err(Error::Input(format!("grid needs at least 16 angular samples, got {}", self.m)));
        }
        if self.radii.iter().any(|&r| !(r > 0.0 && r < 1.0)) {
            return Err(Error::Input("grid radii must lie in (0, 1)".into()));
        }
        if self.radii.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input("grid radii must be strictly increasing".into()));
        }
        Ok(())
    }

    /// The same grid with `factor` times as many angular samples.
    pub fn densified(&self, factor: usize) -> Self {
        Self { m: self.m * factor, ..self.clone() }
    }
}

/// `e^{2 pi i j / m}` for `j = 0..m`, cached per `m`.
fn unit_roots(m: usize) -> Arc<[Complex64]> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<[Complex64]>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(m)
        .or_insert_with(|| {
            (0..m)
                .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64))
                .collect()
        })
        .clone()
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::Input(format!("circle radius r = {r} must lie in (0, 1]")));
    }
    Ok(())
}

/// Largest sampled value of a real function on a circle and where it was found.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirclePeak {
    pub value: f64,
    /// Best value over the raw grid, before refinement.
    pub grid_value: f64,
    pub z: Complex64,
}

/// Maximizes `h(r e^{i theta})` over an `m`-point grid, then refines locally.
pub fn circle_argmax<H>(h: H, r: f64, m: usize, refine_depth: usize) -> Result<CirclePeak>
where
    H: Fn(Complex64) -> Result<f64>,
{
    check_radius(r)?;
    if m == 0 {
        return Err(Error::Input("grid needs at least one sample".into()));
    }
    let roots = unit_roots(m);
    let mut best_j = 0;
    let mut best = f64::NEG_INFINITY;
    for (j, &u) in roots.iter().enumerate() {
        let v = h(u * r)?;
        if v > best {
            best = v;
            best_j = j;
        }
    }
    let grid_value = best;
    let step = 2.0 * PI / m as f64;
    let at = |theta: f64| Complex64::from_polar(r, theta);
    let mut theta_best = step * best_j as f64;

    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut half = step;
    for _ in 0..refine_depth {
        let (mut a, mut b) = (theta_best - half, theta_best + half);
        let mut x1 = b - inv_phi * (b - a);
        let mut x2 = a + inv_phi * (b - a);
        let mut h1 = h(at(x1))?;
        let mut h2 = h(at(x2))?;
        for _ in 0..GOLDEN_ITERS {
            if h1 >= h2 {
                b = x2;
                x2 = x1;
                h2 = h1;
                x1 = b - inv_phi * (b - a);
                h1 = h(at(x1))?;
            } else {
                a = x1;
                x1 = x2;
                h1 = h2;
                x2 = a + inv_phi * (b - a);
                h2 = h(at(x2))?;
            }
        }
        for (x, v) in [(x1, h1), (x2, h2)] {
            if v > best {
                best = v;
                theta_best = x;
            }
        }
        half = (b - a).max(f64::EPSILON);
    }
    Ok(CirclePeak { value: best, grid_value, z: at(theta_best) })
}

/// `max |g|` on the circle `|z| = r`: a lower bound for the true circle maximum.
pub fn circle_max<G>(g: G, r: f64, spec: &GridSpec) -> Result<CirclePeak>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    circle_argmax(|z| g(z).map(|w| w.norm()), r, spec.m, spec.refine_depth)
}

/// Triangle-inequality bound `sum |c_k| r^k`.
pub fn coeff_bound(p: &PolySeries, r: f64) -> f64 {
    let mut power = 1.0;
    let mut total = 0.0;
    for c in p.coeffs() {
        total += c.norm() * power;
        power *= r;
    }
    total
}

/// `sum k |c_k| r^{k-1}`, a bound for `|p'|` on the circle of radius `r`.
fn derivative_bound(p: &PolySeries, r: f64) -> f64 {
    let mut power = 1.0;
    let mut total = 0.0;
    for (k, c) in p.coeffs().iter().enumerate().skip(1) {
        total += k as f64 * c.norm() * power;
        power *= r;
    }
    total
}

/// Certified bracket for `sup_{|z| <= r} |p(z)|`.
///
/// The upper bound is the smaller of the coefficient sum and the grid maximum
/// padded by `L * pi r / m` (half the arc gap times a derivative bound), then
/// inflated by a relative floating-point allowance.
pub fn poly_sup(p: &PolySeries, r: f64, spec: &GridSpec) -> Result<SupBracket> {
    poly_sup_at(p, r, spec).map(|(bracket, _)| bracket)
}

/// [`poly_sup`] together with the point where the lower bound was attained.
pub fn poly_sup_at(p: &PolySeries, r: f64, spec: &GridSpec) -> Result<(SupBracket, Complex64)> {
    check_radius(r)?;
    let coeffs = p.coeffs();
    let peak = circle_argmax(|z| Ok(horner(coeffs, z).norm()), r, spec.m, spec.refine_depth)?;
    let half_gap = PI * r / spec.m as f64;
    let padded = peak.grid_value + derivative_bound(p, r) * half_gap;
    let roundoff = 1.0 + 4.0 * (p.order() as f64 + 2.0) * f64::EPSILON;
    let upper = coeff_bound(p, r).min(padded) * roundoff;
    let bracket = SupBracket { lower: peak.value, upper: upper.max(peak.value), r, kind: BracketKind::Certified };
    Ok((bracket, peak.z))
}

/// Circle maxima on a radius ladder, with the maximum-principle monotonicity checked.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupProfile {
    pub points: Vec<(f64, f64)>,
    pub nondecreasing: bool,
}

pub fn disk_sup_profile<G>(g: G, spec: &GridSpec) -> Result<SupProfile>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    spec.validate()?;
    let points = spec
        .radii
        .iter()
        .map(|&r| circle_max(&g, r, spec).map(|peak| (r, peak.value)))
        .collect::<Result<Vec<_>>>()?;
    let nondecreasing = points.windows(2).all(|w| w[1].1 >= w[0].1 - PROFILE_MONOTONE_TOL);
    Ok(SupProfile { points, nondecreasing })
}
