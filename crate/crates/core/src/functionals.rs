//! The differential expressions that appear in the hypotheses and conclusions
//! of the checked results, as exact polynomials or pointwise evaluators.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::{horner, is_finite, PolySeries, SeriesA};

/// Quotients whose denominator modulus falls below this are treated as singular.
pub const DEFAULT_DENOM_EPS: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Functional {
    /// `f' - f/z`
    D1,
    /// `f/z - 1`
    D2,
    /// `z f'' - beta (f' - f/z)`
    TBeta,
    /// `z f'' - beta (f' - 1)`
    UBeta,
    /// `z^2 f''' + (2 - beta) z f''`
    VBeta,
    /// `z f'/f - 1`
    StarQuotient,
    /// `z f''/f'`
    ConvexQuotient,
    /// `f' - 1`
    FPrime,
}

impl Functional {
    pub const ALL: [Functional; 8] = [
        Functional::D1,
        Functional::D2,
        Functional::TBeta,
        Functional::UBeta,
        Functional::VBeta,
        Functional::StarQuotient,
        Functional::ConvexQuotient,
        Functional::FPrime,
    ];

    pub fn is_polynomial(self) -> bool {
        !matches!(self, Functional::StarQuotient | Functional::ConvexQuotient)
    }
}

/// Exact polynomial of a polynomial-valued functional.
///
/// The coefficient of `z^{k-1}` is a closed-form multiple of `a_k`, e.g.
/// `(k-1)(k-beta) a_k` for [`Functional::TBeta`]; no runtime series algebra is used.
pub fn as_polynomial(id: Functional, f: &SeriesA, beta: Complex64) -> Result<PolySeries> {
    let multiplier: fn(f64, Complex64) -> Complex64 = match id {
        Functional::D1 => |k, _| Complex64::new(k - 1.0, 0.0),
        Functional::D2 => |_, _| Complex64::new(1.0, 0.0),
        Functional::TBeta => |k, b| (k - 1.0) * (k - b),
        Functional::UBeta => |k, b| k * (k - 1.0 - b),
        Functional::VBeta => |k, b| k * (k - 1.0) * (k - b),
        Functional::FPrime => |k, _| Complex64::new(k, 0.0),
        Functional::StarQuotient | Functional::ConvexQuotient => return Err(Error::NotPolynomial(id)),
    };
    if !is_finite(beta) {
        return Err(Error::Input("beta is not finite".into()));
    }
    let a = f.body().coeffs();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); a.len() - 1];
    // k = 1 contributes nothing: a_1 = 1 cancels in every functional.
    for k in 2..a.len() {
        coeffs[k - 1] = multiplier(k as f64, beta) * a[k];
    }
    Ok(PolySeries::from_coeffs_unchecked(coeffs))
}

/// Pointwise evaluator holding `f`, its derivatives and `f/z` for repeated use.
#[derive(Debug, Clone)]
pub struct FunctionalEval {
    f_over_z: Vec<Complex64>,
    d1: Vec<Complex64>,
    d2: Vec<Complex64>,
    d3: Vec<Complex64>,
    denom_eps: f64,
}

impl FunctionalEval {
    pub fn new(f: &SeriesA) -> Self {
        Self::with_denom_eps(f, DEFAULT_DENOM_EPS)
    }

    pub fn with_denom_eps(f: &SeriesA, denom_eps: f64) -> Self {
        let d1 = f.body().derivative();
        let d2 = d1.derivative();
        let d3 = d2.derivative();
        Self {
            f_over_z: f.divide_by_z().coeffs().to_vec(),
            d1: d1.coeffs().to_vec(),
            d2: d2.coeffs().to_vec(),
            d3: d3.coeffs().to_vec(),
            denom_eps,
        }
    }

    /// `f'(z)`
    pub fn fprime(&self, z: Complex64) -> Complex64 {
        horner(&self.d1, z)
    }

    /// `f(z)/z`
    pub fn f_over_z(&self, z: Complex64) -> Complex64 {
        horner(&self.f_over_z, z)
    }

    /// Evaluates `id` at `z`. At `z = 0` the removable-singularity limit `0` is returned.
    pub fn eval(&self, id: Functional, beta: Complex64, z: Complex64) -> Result<Complex64> {
        if !is_finite(z) || !is_finite(beta) {
            return Err(Error::Input("evaluation point or beta is not finite".into()));
        }
        if z.re == 0.0 && z.im == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let one = Complex64::new(1.0, 0.0);
        let value = match id {
            Functional::D1 => self.fprime(z) - self.f_over_z(z),
            Functional::D2 => self.f_over_z(z) - one,
            Functional::FPrime => self.fprime(z) - one,
            Functional::TBeta => {
                z * horner(&self.d2, z) - beta * (self.fprime(z) - self.f_over_z(z))
            }
            Functional::UBeta => z * horner(&self.d2, z) - beta * (self.fprime(z) - one),
            Functional::VBeta => {
                z * z * horner(&self.d3, z) + (2.0 - beta) * z * horner(&self.d2, z)
            }
            // z f'/f - 1 = (f' - f/z) / (f/z); the denominator f/z is 1 at the origin.
            Functional::StarQuotient => {
                let q = self.f_over_z(z);
                self.guard(q, z)?;
                (self.fprime(z) - q) / q
            }
            Functional::ConvexQuotient => {
                let d = self.fprime(z);
                self.guard(d, z)?;
                z * horner(&self.d2, z) / d
            }
        };
        Ok(value)
    }

    fn guard(&self, denominator: Complex64, z: Complex64) -> Result<()> {
        let modulus = denominator.norm();
        if modulus < self.denom_eps {
            return Err(Error::SingularDenominator { z, modulus });
        }
        Ok(())
    }
}

/// One-shot pointwise evaluation of a functional.
pub fn eval_functional(id: Functional, f: &SeriesA, beta: Complex64, z: Complex64) -> Result<Complex64> {
    if z.norm() >= 1.0 {
        return Err(Error::Input(format!("functionals are evaluated inside the unit disk, got |z| = {}", z.norm())));
    }
    FunctionalEval::new(f).eval(id, beta, z)
}
