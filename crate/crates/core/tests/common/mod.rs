#![allow(dead_code)]

use gft_core::{Complex, PolySeries, SeriesA};
use proptest::prelude::*;
use std::f64::consts::TAU;

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn coeff() -> impl Strategy<Value = Complex> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| c(re, im))
}

/// Functions in A_n with n in 1..=3 and up to `max_tail` random tail coefficients.
pub fn series_a(max_tail: usize) -> impl Strategy<Value = SeriesA> {
    (1usize..=3, prop::collection::vec(coeff(), 0..=max_tail))
        .prop_map(|(n, tail)| SeriesA::from_tail(n, &tail).unwrap())
}

/// Random point with |z| <= rmax.
pub fn disk_point(rmax: f64) -> impl Strategy<Value = Complex> {
    (0.0..rmax, 0.0..std::f64::consts::TAU).prop_map(|(r, t)| Complex::from_polar(r, t))
}

pub fn poly(max_order: usize) -> impl Strategy<Value = PolySeries> {
    prop::collection::vec(coeff(), 1..=max_order + 1).prop_map(|cs| PolySeries::new(cs).unwrap())
}

pub fn beta() -> impl Strategy<Value = Complex> {
    (-2.0f64..1.0, -2.0f64..2.0).prop_map(|(re, im)| c(re, im))
}

pub fn rel_close(a: Complex, b: Complex, tol: f64) -> bool {
    (a - b).norm() <= tol * a.norm().max(b.norm()).max(1.0)
}

/// Sup of `|p|` on `|z| = r`: an `m`-point grid with every local maximum polished by golden section.
pub fn reference_max(p: &PolySeries, r: f64, m: usize) -> f64 {
    let val = |t: f64| p.eval(Complex::from_polar(r, t)).unwrap().norm();
    let samples: Vec<f64> = (0..m).map(|j| val(TAU * j as f64 / m as f64)).collect();
    let step = TAU / m as f64;
    let mut best = samples.iter().copied().fold(0.0, f64::max);
    for j in 0..m {
        let (prev, next) = (samples[(j + m - 1) % m], samples[(j + 1) % m]);
        if samples[j] < prev || samples[j] < next {
            continue;
        }
        let (mut a, mut b) = (step * j as f64 - step, step * j as f64 + step);
        let g = (5f64.sqrt() - 1.0) / 2.0;
        for _ in 0..80 {
            let (x1, x2) = (b - g * (b - a), a + g * (b - a));
            if val(x1) >= val(x2) {
                b = x2;
            } else {
                a = x1;
            }
        }
        best = best.max(val(0.5 * (a + b)));
    }
    best
}
