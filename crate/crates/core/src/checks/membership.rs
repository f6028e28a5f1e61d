//! Grid tests of the class definitions `Re q(z) > alpha` on circles up to `r_max`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{CheckConfig, Verdict, VerdictState};
use crate::error::{Error, Result};
use crate::functionals::{as_polynomial, Functional, FunctionalEval};
use crate::series::SeriesA;
use crate::sup::{circle_argmax, poly_sup, SupBracket};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassId {
    /// `Re(z f'/f) > alpha`
    Star,
    /// `Re(f') > alpha`
    BoundedTurning,
    /// `Re(1 + z f''/f') > alpha`
    Convex,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MembershipReport {
    pub class: ClassId,
    pub alpha: f64,
    pub r_max: f64,
    /// Nonvanishing guard for the quotient classes.
    pub guard: Option<SupBracket>,
    /// Smallest real part found; `None` if the scan did not run.
    pub min_real_part: Option<f64>,
    /// Location of the minimum on failure, or of a vanishing denominator.
    pub witness: Option<Complex64>,
    pub verdict: Verdict,
}

fn radii_up_to(cfg: &CheckConfig) -> Vec<f64> {
    let mut radii: Vec<f64> = cfg.grid.radii.iter().copied().filter(|&r| r < cfg.r_max).collect();
    radii.push(cfg.r_max);
    radii
}

/// Decides `f` in `class` of order `alpha` by the minimum real part over circles up to `r_max`.
///
/// Real parts of analytic functions are harmonic, so the minimum over each
/// closed disk sits on its boundary circle; the smaller circles of the ladder
/// are scanned as a consistency check.
pub fn membership(class: ClassId, f: &SeriesA, alpha: f64, cfg: &CheckConfig) -> Result<MembershipReport> {
    cfg.validate()?;
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Parameter(format!("0 <= alpha < 1 is violated by alpha = {alpha}")));
    }
    let zero = Complex64::new(0.0, 0.0);
    let guard_functional = match class {
        ClassId::Star => Some(Functional::D2),
        ClassId::Convex => Some(Functional::FPrime),
        ClassId::BoundedTurning => None,
    };
    let guard = guard_functional
        .map(|id| poly_sup(&as_polynomial(id, f, zero)?, cfg.r_max, &cfg.grid))
        .transpose()?;
    let hypothesis_margin = guard.map(|g| 1.0 - g.upper);
    let mut report = MembershipReport {
        class,
        alpha,
        r_max: cfg.r_max,
        guard,
        min_real_part: None,
        witness: None,
        verdict: Verdict { state: VerdictState::Inconclusive, hypothesis_margin, conclusion_margin: None },
    };
    if matches!(hypothesis_margin, Some(m) if m <= 0.0) {
        return Ok(report);
    }

    let eval = FunctionalEval::with_denom_eps(f, cfg.denom_eps);
    let real_part = |z: Complex64| -> Result<f64> {
        Ok(match class {
            ClassId::Star => 1.0 + eval.eval(Functional::StarQuotient, zero, z)?.re,
            ClassId::Convex => 1.0 + eval.eval(Functional::ConvexQuotient, zero, z)?.re,
            ClassId::BoundedTurning => eval.fprime(z).re,
        })
    };

    let mut lowest = f64::INFINITY;
    let mut at = zero;
    for r in radii_up_to(cfg) {
        match circle_argmax(|z| real_part(z).map(|v| -v), r, cfg.grid.m, cfg.grid.refine_depth) {
            Ok(peak) if -peak.value < lowest => {
                lowest = -peak.value;
                at = peak.z;
            }
            Ok(_) => {}
            Err(Error::SingularDenominator { z, .. }) => {
                report.witness = Some(z);
                return Ok(report);
            }
            Err(e) => return Err(e),
        }
    }

    let margin = lowest - alpha;
    report.min_real_part = Some(lowest);
    report.verdict.conclusion_margin = Some(margin);
    if margin > 0.0 {
        report.verdict.state = VerdictState::Holds;
    } else {
        report.verdict.state = VerdictState::Fails;
        report.witness = Some(at);
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DualityReport {
    pub convex: MembershipReport,
    pub star_of_zfprime: MembershipReport,
    /// `Holds` when both memberships reach the same state, `Fails` otherwise.
    pub verdict: Verdict,
}

/// Compares `f` in the convex class with `z f'` in the starlike class of the same order.
pub fn duality_check(f: &SeriesA, alpha: f64, cfg: &CheckConfig) -> Result<DualityReport> {
    let convex = membership(ClassId::Convex, f, alpha, cfg)?;
    let star_of_zfprime = membership(ClassId::Star, &f.to_zfprime(), alpha, cfg)?;
    let state = if convex.verdict.state == star_of_zfprime.verdict.state {
        VerdictState::Holds
    } else {
        VerdictState::Fails
    };
    let conclusion_margin = match (convex.min_real_part, star_of_zfprime.min_real_part) {
        (Some(a), Some(b)) => Some(-(a - b).abs()),
        _ => None,
    };
    Ok(DualityReport {
        verdict: Verdict { state, hypothesis_margin: None, conclusion_margin },
        convex,
        star_of_zfprime,
    })
}
