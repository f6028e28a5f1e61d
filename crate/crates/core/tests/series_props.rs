mod common;

use common::*;
use gft_core::{as_polynomial, eval_functional, Functional, SeriesA};
use proptest::prelude::*;

fn assert_class_invariant(f: &SeriesA) {
    let b = f.body();
    assert_eq!(b.coeff(0), c(0.0, 0.0));
    assert_eq!(b.coeff(1), c(1.0, 0.0));
    for k in 2..=f.n() {
        assert_eq!(b.coeff(k), c(0.0, 0.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_matches_central_difference(f in series_a(6), zs in prop::collection::vec(disk_point(0.9), 100)) {
        let h = 1e-5;
        let d = f.body().derivative();
        for z in zs {
            let fd = (f.eval(z + h).unwrap() - f.eval(z - h).unwrap()) / (2.0 * h);
            let exact = d.eval(z).unwrap();
            prop_assert!(rel_close(exact, fd, 1e-6), "{exact} vs {fd}");
        }
    }

    #[test]
    fn divide_by_z_times_z_recovers_f(f in series_a(6), zs in prop::collection::vec(disk_point(1.0), 100)) {
        let q = f.divide_by_z();
        for z in zs {
            let lhs = q.eval(z).unwrap() * z;
            let rhs = f.eval(z).unwrap();
            prop_assert!((lhs - rhs).norm() <= 64.0 * f64::EPSILON * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn scale_radius_is_a_semigroup(f in series_a(6), r in 0.05f64..=1.0, s in 0.05f64..=1.0) {
        let twice = f.scale_radius(r).unwrap().scale_radius(s).unwrap();
        let once = f.scale_radius(r * s).unwrap();
        for (a, b) in twice.body().coeffs().iter().zip(once.body().coeffs()) {
            prop_assert!((a - b).norm() <= 1e-12);
        }
        assert_class_invariant(&twice);
    }

    #[test]
    fn to_zfprime_is_z_times_derivative(f in series_a(6), zs in prop::collection::vec(disk_point(0.99), 100)) {
        let g = f.to_zfprime();
        assert_class_invariant(&g);
        prop_assert_eq!(g.n(), f.n());
        let d = f.body().derivative();
        for z in zs {
            prop_assert!(rel_close(g.eval(z).unwrap(), z * d.eval(z).unwrap(), 1e-12));
        }
    }

    #[test]
    fn polynomial_and_pointwise_functionals_agree(f in series_a(6), b in beta(), z in disk_point(0.99)) {
        for id in Functional::ALL.into_iter().filter(|id| id.is_polynomial()) {
            let p = as_polynomial(id, &f, b).unwrap();
            let pointwise = eval_functional(id, &f, b, z).unwrap();
            prop_assert!(rel_close(p.eval(z).unwrap(), pointwise, 1e-10), "{:?}", id);
        }
    }

    // z f'' = z w' + w with w = f' - f/z
    #[test]
    fn first_difference_identity(f in series_a(6), z in disk_point(0.99)) {
        let w = as_polynomial(Functional::D1, &f, c(0.0, 0.0)).unwrap();
        let lhs = z * w.derivative().eval(z).unwrap() + w.eval(z).unwrap();
        let rhs = z * f.body().derivative().derivative().eval(z).unwrap();
        prop_assert!(rel_close(lhs, rhs, 1e-10));
    }

    // z f'' = z^2 w'' + 2 z w' with w = f/z - 1
    #[test]
    fn quotient_identity(f in series_a(6), z in disk_point(0.99)) {
        let w = as_polynomial(Functional::D2, &f, c(0.0, 0.0)).unwrap();
        let w1 = w.derivative();
        let lhs = z * z * w1.derivative().eval(z).unwrap() + 2.0 * z * w1.eval(z).unwrap();
        let rhs = z * f.body().derivative().derivative().eval(z).unwrap();
        prop_assert!(rel_close(lhs, rhs, 1e-10));
    }

    // Substituting z f' for f turns T_beta into V_beta.
    #[test]
    fn t_of_zfprime_is_v(f in series_a(6), b in beta(), z in disk_point(0.99)) {
        let t = eval_functional(Functional::TBeta, &f.to_zfprime(), b, z).unwrap();
        let v = eval_functional(Functional::VBeta, &f, b, z).unwrap();
        prop_assert!(rel_close(t, v, 1e-10));
    }

    #[test]
    fn every_functional_vanishes_at_the_origin(f in series_a(6), b in beta()) {
        for id in Functional::ALL {
            prop_assert_eq!(eval_functional(id, &f, b, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        }
    }

    #[test]
    fn coefficient_formulas_match_series_algebra(f in series_a(6), b in beta()) {
        // Independent route: assemble each functional from derivatives and shifts.
        let d1 = f.body().derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        let q = f.divide_by_z();
        let m = f.body().order();
        for k in 0..m {
            let fp = d1.coeff(k);
            let q_k = q.coeff(k);
            let zf2 = if k >= 1 { d2.coeff(k - 1) } else { c(0.0, 0.0) };
            let z2f3 = if k >= 2 { d3.coeff(k - 2) } else { c(0.0, 0.0) };
            let one = if k == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) };
            let want = [
                (Functional::D1, fp - q_k),
                (Functional::D2, q_k - one),
                (Functional::TBeta, zf2 - b * (fp - q_k)),
                (Functional::UBeta, zf2 - b * (fp - one)),
                (Functional::VBeta, z2f3 + (2.0 - b) * zf2),
                (Functional::FPrime, fp - one),
            ];
            for (id, w) in want {
                let got = as_polynomial(id, &f, b).unwrap().coeff(k);
                prop_assert!((got - w).norm() <= 1e-12 * (1.0 + w.norm()), "{:?} k={}", id, k);
            }
        }
    }
}
