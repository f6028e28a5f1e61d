mod common;

use std::f64::consts::TAU;

use common::*;
use gft_core::functionals::FunctionalEval;
use gft_core::{circle_max, coeff_bound, disk_sup_profile, poly_sup, BracketKind, Complex, Functional, GridSpec, PolySeries};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn brackets_contain_a_denser_reference(p in poly(12), r in 0.1f64..=1.0) {
        let spec = GridSpec::with_m(256);
        let b = poly_sup(&p, r, &spec).unwrap();
        let reference = reference_max(&p, r, 64 * spec.m);
        prop_assert_eq!(b.kind, BracketKind::Certified);
        prop_assert!(b.lower <= b.upper);
        prop_assert!(reference <= b.upper, "reference {} above upper {}", reference, b.upper);
        prop_assert!(reference >= b.lower - 1e-12, "reference {} below lower {}", reference, b.lower);
    }

    #[test]
    fn coeff_bound_dominates_the_circle_max(p in poly(12), r in 0.1f64..=1.0) {
        let peak = circle_max(|z| p.eval(z), r, &GridSpec::default()).unwrap();
        prop_assert!(coeff_bound(&p, r) >= peak.value - 1e-12);
    }

    #[test]
    fn monomial_brackets_are_tight(k in 1usize..10, a in coeff(), r in 0.1f64..=1.0, m in 16usize..2048) {
        let p = PolySeries::monomial(a, k).unwrap();
        let b = poly_sup(&p, r, &GridSpec::with_m(m)).unwrap();
        prop_assert!(b.upper - b.lower <= TAU * k as f64 * a.norm() / m as f64 + 1e-15);
    }

    #[test]
    fn polynomial_profiles_are_nondecreasing(p in poly(10)) {
        let prof = disk_sup_profile(|z| p.eval(z), &GridSpec::with_m(512)).unwrap();
        prop_assert!(prof.nondecreasing, "{:?}", prof.points);
    }

    #[test]
    fn quotient_profiles_are_nondecreasing(f in series_a(5), target in 0.05f64..0.95) {
        // With sum |k a_k| < 1 neither f/z nor f' vanishes, so both quotients are analytic.
        let fp = gft_core::as_polynomial(Functional::FPrime, &f, c(0.0, 0.0)).unwrap();
        let scale = (target / coeff_bound(&fp, 1.0)).min(1.0);
        let tail: Vec<Complex> = f.tail().iter().map(|a| a * scale).collect();
        let g = gft_core::SeriesA::from_tail(f.n(), &tail).unwrap();
        let ev = FunctionalEval::new(&g);
        for id in [Functional::StarQuotient, Functional::ConvexQuotient, Functional::TBeta] {
            let prof = disk_sup_profile(|z| ev.eval(id, c(0.5, -0.5), z), &GridSpec::with_m(512)).unwrap();
            prop_assert!(prof.nondecreasing, "{:?} {:?}", id, prof.points);
        }
    }
}
