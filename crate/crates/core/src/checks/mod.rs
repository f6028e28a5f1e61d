//! One checker per result: certify the hypothesis sup against its threshold,
//! sample the conclusion against its bound, and combine both into a verdict.

mod jack;
mod membership;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functionals::{as_polynomial, Functional, FunctionalEval, DEFAULT_DENOM_EPS};
use crate::series::{is_finite, SeriesA};
use crate::sup::{circle_max, poly_sup, poly_sup_at, GridSpec, SupBracket};

pub use jack::{jack_probe, JackReport};
pub use membership::{duality_check, membership, ClassId, DualityReport, MembershipReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    /// `|T_beta| < rho |n+1-beta|` gives `|f' - f/z| < rho`.
    Lem11,
    /// `|T_beta| < rho n |n+1-beta|` gives `|f/z - 1| < rho`.
    Lem12,
    /// Starlikeness of order alpha from a bound on `T_beta`.
    Thm1,
    /// Convexity of order alpha from a bound on `V_beta`.
    Cor1,
    /// Bounded turning of order alpha from a bound on `U_beta`.
    Thm2,
    /// `|U_beta| < rho |n-beta|` gives `|f' - 1| < rho`.
    Lem3,
    /// `|1/f' - 1/(2 alpha)| < 1/(2 alpha)` from a bound on `U_beta`.
    Thm3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::Lem11,
        TheoremId::Lem12,
        TheoremId::Thm1,
        TheoremId::Cor1,
        TheoremId::Thm2,
        TheoremId::Lem3,
        TheoremId::Thm3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Lem11 => "lem11",
            TheoremId::Lem12 => "lem12",
            TheoremId::Thm1 => "thm1",
            TheoremId::Cor1 => "cor1",
            TheoremId::Thm2 => "thm2",
            TheoremId::Lem3 => "lem3",
            TheoremId::Thm3 => "thm3",
        }
    }

    /// Whether the result is stated in terms of a radius `rho` rather than an order `alpha`.
    pub fn uses_rho(self) -> bool {
        matches!(self, TheoremId::Lem11 | TheoremId::Lem12 | TheoremId::Lem3)
    }

    /// Functional bounded by the hypothesis.
    pub fn hypothesis_functional(self) -> Functional {
        match self {
            TheoremId::Lem11 | TheoremId::Lem12 | TheoremId::Thm1 => Functional::TBeta,
            TheoremId::Cor1 => Functional::VBeta,
            TheoremId::Thm2 | TheoremId::Lem3 | TheoremId::Thm3 => Functional::UBeta,
        }
    }

    /// `n + 1` for results on `T_beta`/`V_beta`, `n` for those on `U_beta`.
    fn beta_ceiling(self, n: usize) -> f64 {
        match self.hypothesis_functional() {
            Functional::UBeta => n as f64,
            _ => (n + 1) as f64,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown theorem '{s}'")))
    }
}

/// Parameters of one theorem instance. `rho` is only read by the rho-lemmas.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub alpha: f64,
    pub beta: Complex64,
    pub rho: Option<f64>,
}

impl Params {
    pub fn new(n: usize, alpha: f64, beta: Complex64) -> Self {
        Self { n, alpha, beta, rho: None }
    }

    pub fn with_rho(mut self, rho: f64) -> Self {
        self.rho = Some(rho);
        self
    }

    /// Checks the admissible ranges of `theorem` and returns `rho` when it is used.
    pub fn validate(&self, theorem: TheoremId) -> Result<()> {
        let param = |msg: String| Err(Error::Parameter(format!("{theorem}: {msg}")));
        if self.n == 0 {
            return param("n must be at least 1".into());
        }
        if !self.alpha.is_finite() || !is_finite(self.beta) {
            return param("alpha and beta must be finite".into());
        }
        let ceiling = theorem.beta_ceiling(self.n);
        if self.beta.re >= ceiling {
            let bound = if ceiling == self.n as f64 { "n" } else { "n+1" };
            return param(format!("Re(beta) < {bound} = {ceiling} is violated by Re(beta) = {}", self.beta.re));
        }
        match theorem {
            TheoremId::Lem11 | TheoremId::Lem12 | TheoremId::Lem3 => match self.rho {
                Some(rho) if rho > 0.0 && rho.is_finite() => Ok(()),
                Some(rho) => param(format!("rho > 0 is violated by rho = {rho}")),
                None => param("rho is required".into()),
            },
            TheoremId::Thm1 | TheoremId::Cor1 | TheoremId::Thm2 => {
                if (0.0..1.0).contains(&self.alpha) {
                    Ok(())
                } else {
                    param(format!("0 <= alpha < 1 is violated by alpha = {}", self.alpha))
                }
            }
            TheoremId::Thm3 => {
                if self.alpha > 0.0 && self.alpha < 1.0 {
                    Ok(())
                } else {
                    param(format!("0 < alpha < 1 is violated by alpha = {}", self.alpha))
                }
            }
        }
    }

    fn rho_value(&self) -> f64 {
        self.rho.unwrap_or(f64::NAN)
    }
}

/// The two hypotheses of the `1/f'` disk criterion, split at `alpha = 1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Thm3Branch {
    /// `0 < alpha <= 1/2`, threshold `alpha |n - beta|`.
    Lower,
    /// `1/2 <= alpha < 1`, threshold `(1 - alpha) |n - beta|`.
    Upper,
}

/// Threshold of one branch of [`TheoremId::Thm3`].
pub fn thm3_branch_threshold(branch: Thm3Branch, params: &Params) -> Result<f64> {
    params.validate(TheoremId::Thm3)?;
    let n = params.n as f64;
    let alpha = params.alpha;
    match branch {
        Thm3Branch::Lower if alpha <= 0.5 => Ok(alpha * (n - params.beta).norm()),
        Thm3Branch::Upper if alpha >= 0.5 => Ok((1.0 - alpha) * (n - params.beta).norm()),
        _ => Err(Error::Parameter(format!("thm3: alpha = {alpha} is outside the {branch:?} branch"))),
    }
}

/// Right-hand side of the hypothesis inequality.
pub fn threshold(theorem: TheoremId, params: &Params) -> Result<f64> {
    params.validate(theorem)?;
    let n = params.n as f64;
    let alpha = params.alpha;
    let beta = params.beta;
    let value = match theorem {
        TheoremId::Lem11 => params.rho_value() * (n + 1.0 - beta).norm(),
        TheoremId::Lem12 => params.rho_value() * n * (n + 1.0 - beta).norm(),
        TheoremId::Thm1 | TheoremId::Cor1 => (1.0 - alpha) * n * (n + 1.0 - beta).norm() / (n + 1.0 - alpha),
        TheoremId::Thm2 => (1.0 - alpha) * (n - beta).norm(),
        TheoremId::Lem3 => params.rho_value() * (n - beta).norm(),
        TheoremId::Thm3 => {
            let branch = if alpha <= 0.5 { Thm3Branch::Lower } else { Thm3Branch::Upper };
            thm3_branch_threshold(branch, params)?
        }
    };
    Ok(value)
}

/// Bound on the conclusion functional.
pub fn conclusion_bound(theorem: TheoremId, params: &Params) -> Result<f64> {
    params.validate(theorem)?;
    Ok(match theorem {
        TheoremId::Lem11 | TheoremId::Lem12 | TheoremId::Lem3 => params.rho_value(),
        TheoremId::Thm1 | TheoremId::Cor1 | TheoremId::Thm2 => 1.0 - params.alpha,
        TheoremId::Thm3 => 1.0 / (2.0 * params.alpha),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictState {
    Holds,
    Fails,
    Inconclusive,
}

impl VerdictState {
    /// Process exit code: 0 holds, 1 fails, 2 inconclusive.
    pub fn exit_code(self) -> u8 {
        match self {
            VerdictState::Holds => 0,
            VerdictState::Fails => 1,
            VerdictState::Inconclusive => 2,
        }
    }
}

/// Margins are `threshold - value`; positive means the inequality holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub state: VerdictState,
    pub hypothesis_margin: Option<f64>,
    pub conclusion_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub grid: GridSpec,
    /// Radius of the circle standing in for the open unit disk.
    pub r_max: f64,
    /// `Holds` needs `hyp.upper < threshold - slack`.
    pub slack: f64,
    pub denom_eps: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self { grid: GridSpec::default(), r_max: 0.999, slack: 0.0, denom_eps: DEFAULT_DENOM_EPS }
    }
}

impl CheckConfig {
    pub fn with_r_max(mut self, r_max: f64) -> Self {
        self.r_max = r_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        self.grid.validate()?;
        if !(self.r_max > 0.0 && self.r_max < 1.0) {
            return Err(Error::Input(format!("r_max = {} must lie in (0, 1)", self.r_max)));
        }
        if !(self.slack >= 0.0 && self.slack.is_finite()) {
            return Err(Error::Input("slack must be a finite non-negative number".into()));
        }
        if !(self.denom_eps > 0.0 && self.denom_eps.is_finite()) {
            return Err(Error::Input("denominator threshold must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub params: Params,
    pub r_max: f64,
    pub hyp: SupBracket,
    pub hyp_threshold: f64,
    /// Certified `sup |f/z - 1|` or `sup |f' - 1|` that must stay below 1
    /// before a quotient conclusion is sampled.
    pub guard: Option<SupBracket>,
    /// `None` when the nonvanishing guard failed or a denominator vanished.
    pub concl: Option<SupBracket>,
    pub concl_bound: f64,
    pub verdict: Verdict,
    pub witness: Option<Complex64>,
}

/// Runs one theorem instance on `f` at radius `cfg.r_max`.
pub fn check(theorem: TheoremId, f: &SeriesA, params: &Params, cfg: &CheckConfig) -> Result<CheckReport> {
    cfg.validate()?;
    if params.n != f.n() {
        return Err(Error::Parameter(format!("params use n = {} but the function is in A_{}", params.n, f.n())));
    }
    let hyp_threshold = threshold(theorem, params)?;
    let concl_bound = conclusion_bound(theorem, params)?;
    let beta = params.beta;
    let r = cfg.r_max;

    let hyp_poly = as_polynomial(theorem.hypothesis_functional(), f, beta)?;
    let hyp = poly_sup(&hyp_poly, r, &cfg.grid)?;
    let hyp_margin = hyp_threshold - cfg.slack - hyp.upper;
    let mut hyp_ok = hyp_margin > 0.0;

    if theorem == TheoremId::Thm3 && params.alpha == 0.5 {
        let lower = thm3_branch_threshold(Thm3Branch::Lower, params)?;
        let upper = thm3_branch_threshold(Thm3Branch::Upper, params)?;
        hyp_ok &= lower == upper;
    }

    let conclusion = match theorem {
        TheoremId::Lem11 => Conclusion::Poly(Functional::D1),
        TheoremId::Lem12 => Conclusion::Poly(Functional::D2),
        TheoremId::Thm2 | TheoremId::Lem3 => Conclusion::Poly(Functional::FPrime),
        TheoremId::Thm1 => Conclusion::Quotient(Functional::StarQuotient, Functional::D2),
        TheoremId::Cor1 => Conclusion::Quotient(Functional::ConvexQuotient, Functional::FPrime),
        TheoremId::Thm3 => Conclusion::ReciprocalDisk,
    };

    let eval = FunctionalEval::with_denom_eps(f, cfg.denom_eps);
    let mut guard = None;
    let outcome = match conclusion {
        Conclusion::Poly(id) => {
            let p = as_polynomial(id, f, beta)?;
            let (bracket, at) = poly_sup_at(&p, r, &cfg.grid)?;
            Sampled::Value(bracket, at)
        }
        Conclusion::Quotient(id, guard_id) => {
            let g = poly_sup(&as_polynomial(guard_id, f, beta)?, r, &cfg.grid)?;
            guard = Some(g);
            if g.upper < 1.0 {
                sample_rational(|z| eval.eval(id, beta, z), r, &cfg.grid)?
            } else {
                Sampled::GuardFailed
            }
        }
        Conclusion::ReciprocalDisk => {
            let g = poly_sup(&as_polynomial(Functional::FPrime, f, beta)?, r, &cfg.grid)?;
            guard = Some(g);
            if g.upper < 1.0 {
                let center = 1.0 / (2.0 * params.alpha);
                sample_rational(|z| reciprocal_offset(&eval, z, center, cfg.denom_eps), r, &cfg.grid)?
            } else {
                Sampled::GuardFailed
            }
        }
    };

    let (concl, witness, state, concl_margin) = match outcome {
        Sampled::Value(bracket, at) => {
            let margin = concl_bound - bracket.lower;
            let state = match (hyp_ok, margin > 0.0) {
                (true, true) => VerdictState::Holds,
                (true, false) => VerdictState::Fails,
                (false, _) => VerdictState::Inconclusive,
            };
            let witness = (state == VerdictState::Fails).then_some(at);
            (Some(bracket), witness, state, Some(margin))
        }
        Sampled::GuardFailed => (None, None, VerdictState::Inconclusive, None),
        Sampled::Singular(z) => (None, Some(z), VerdictState::Inconclusive, None),
    };

    Ok(CheckReport {
        theorem,
        params: *params,
        r_max: r,
        hyp,
        hyp_threshold,
        guard,
        concl,
        concl_bound,
        verdict: Verdict { state, hypothesis_margin: Some(hyp_margin), conclusion_margin: concl_margin },
        witness,
    })
}

enum Conclusion {
    Poly(Functional),
    /// Rational functional sampled after a certified `sup |guard| < 1`.
    Quotient(Functional, Functional),
    /// `1/f' - 1/(2 alpha)`, guarded by `sup |f' - 1| < 1`.
    ReciprocalDisk,
}

enum Sampled {
    Value(SupBracket, Complex64),
    GuardFailed,
    Singular(Complex64),
}

fn sample_rational<G>(g: G, r: f64, grid: &GridSpec) -> Result<Sampled>
where
    G: Fn(Complex64) -> Result<Complex64>,
{
    match circle_max(g, r, grid) {
        Ok(peak) => Ok(Sampled::Value(SupBracket::grid_only(peak.value, r), peak.z)),
        Err(Error::SingularDenominator { z, .. }) => Ok(Sampled::Singular(z)),
        Err(e) => Err(e),
    }
}

pub(crate) fn reciprocal_offset(eval: &FunctionalEval, z: Complex64, center: f64, eps: f64) -> Result<Complex64> {
    let d = eval.fprime(z);
    let modulus = d.norm();
    if modulus < eps {
        return Err(Error::SingularDenominator { z, modulus });
    }
    Ok(1.0 / d - center)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // |a + bi| from its parts, without Complex64::norm's hypot.
    fn modulus(z: Complex64) -> f64 {
        (z.re * z.re + z.im * z.im).sqrt()
    }

    #[test]
    fn threshold_examples() {
        let p = Params::new(1, 0.5, c(0.0, 0.0));
        assert!((threshold(TheoremId::Thm1, &p).unwrap() - 2.0 / 3.0).abs() < 1e-16);
        let p = Params::new(1, 0.0, c(0.0, 0.0));
        assert_eq!(threshold(TheoremId::Thm2, &p).unwrap(), 1.0);
        assert_eq!(threshold(TheoremId::Thm1, &p).unwrap(), 1.0);
        let p = Params::new(1, 0.5, c(0.0, 0.0));
        assert_eq!(threshold(TheoremId::Thm3, &p).unwrap(), 0.5);
    }

    #[test]
    fn threshold_matches_independent_formulas() {
        for n in 1..4 {
            for beta in [c(0.0, 0.0), c(0.5, 0.0), c(-1.0, 0.0), c(0.0, 2.0), c(-0.3, -1.7)] {
                for alpha in [0.0, 0.25, 0.5, 0.75] {
                    let nf = n as f64;
                    let p = Params::new(n, alpha, beta).with_rho(0.7);
                    let m1 = modulus(c(nf + 1.0 - beta.re, -beta.im));
                    let m0 = modulus(c(nf - beta.re, -beta.im));
                    let expect = [
                        (TheoremId::Lem11, 0.7 * m1),
                        (TheoremId::Lem12, 0.7 * nf * m1),
                        (TheoremId::Thm1, (1.0 - alpha) * nf * m1 / (nf + 1.0 - alpha)),
                        (TheoremId::Cor1, (1.0 - alpha) * nf * m1 / (nf + 1.0 - alpha)),
                        (TheoremId::Thm2, (1.0 - alpha) * m0),
                        (TheoremId::Lem3, 0.7 * m0),
                    ];
                    for (t, want) in expect {
                        let got = threshold(t, &p).unwrap();
                        assert!((got - want).abs() <= 1e-15 * want, "{t} {got} {want}");
                    }
                    if alpha > 0.0 {
                        let want = alpha.min(1.0 - alpha) * m0;
                        let got = threshold(TheoremId::Thm3, &p).unwrap();
                        assert!((got - want).abs() <= 1e-15 * want);
                    }
                }
            }
        }
    }

    #[test]
    fn parameter_validation() {
        let f = c(0.0, 0.0);
        let bad = [
            (TheoremId::Thm1, Params::new(1, 0.5, c(2.0, 0.0))),
            (TheoremId::Thm1, Params::new(1, 1.0, f)),
            (TheoremId::Cor1, Params::new(1, -0.1, f)),
            (TheoremId::Thm2, Params::new(1, 0.5, c(1.0, 0.0))),
            (TheoremId::Thm3, Params::new(1, 0.0, f)),
            (TheoremId::Thm3, Params::new(2, 0.3, c(2.5, 1.0))),
            (TheoremId::Lem11, Params::new(1, 0.0, f)),
            (TheoremId::Lem3, Params::new(1, 0.0, f).with_rho(-1.0)),
            (TheoremId::Lem12, Params::new(1, 0.0, c(f64::NAN, 0.0)).with_rho(1.0)),
        ];
        for (t, p) in bad {
            assert!(matches!(threshold(t, &p), Err(Error::Parameter(_))), "{t} {p:?}");
        }
        // Re(beta) between n and n+1 is fine for T-based results only.
        let p = Params::new(1, 0.2, c(1.5, 0.0)).with_rho(1.0);
        assert!(threshold(TheoremId::Thm1, &p).is_ok());
        assert!(threshold(TheoremId::Lem11, &p).is_ok());
        assert!(threshold(TheoremId::Thm2, &p).is_err());
    }

    #[test]
    fn thm3_branches_agree_at_half() {
        for n in 1..4 {
            for beta in [c(0.0, 0.0), c(0.5, 0.0), c(-1.0, 0.0), c(0.0, 2.0)] {
                let p = Params::new(n, 0.5, beta);
                let lo = thm3_branch_threshold(Thm3Branch::Lower, &p).unwrap();
                let hi = thm3_branch_threshold(Thm3Branch::Upper, &p).unwrap();
                assert_eq!(lo, hi);
            }
        }
        let p = Params::new(1, 0.7, c(0.0, 0.0));
        assert!(thm3_branch_threshold(Thm3Branch::Lower, &p).is_err());
    }

    #[test]
    fn check_first_example_holds() {
        let f = SeriesA::from_tail(1, &[c(1.0 / 3.0, 0.0)]).unwrap();
        let p = Params::new(1, 0.5, c(0.0, 0.0));
        let rep = check(TheoremId::Thm1, &f, &p, &CheckConfig::default()).unwrap();
        assert_eq!(rep.verdict.state, VerdictState::Holds);
        assert!((rep.hyp.lower - 0.666).abs() < 1e-12);
        assert!(rep.hyp.upper < 2.0 / 3.0);
        let concl = rep.concl.unwrap();
        assert!((concl.lower - 0.333 / (1.0 - 0.333)).abs() < 1e-12);
        assert!(concl.lower < 0.5);
        assert!(rep.guard.unwrap().upper < 1.0);
    }

    #[test]
    fn identity_holds_everywhere() {
        let f = SeriesA::identity(2).unwrap();
        let p = Params::new(2, 0.4, c(0.5, 0.5)).with_rho(0.3);
        for t in TheoremId::ALL {
            let rep = check(t, &f, &p, &CheckConfig::default()).unwrap();
            assert_eq!(rep.verdict.state, VerdictState::Holds, "{t}");
            assert_eq!(rep.hyp.upper, 0.0);
            assert_eq!(rep.concl.unwrap().lower, if t == TheoremId::Thm3 { 1.0 / 0.8 - 1.0 } else { 0.0 });
        }
    }

    #[test]
    fn check_second_example_alpha_zero() {
        let f = SeriesA::from_tail(1, &[c(0.5, 0.0)]).unwrap();
        let p = Params::new(1, 0.0, c(0.0, 0.0));
        let rep = check(TheoremId::Thm2, &f, &p, &CheckConfig::default()).unwrap();
        assert_eq!(rep.verdict.state, VerdictState::Holds);
        assert!((rep.hyp.lower - 0.999).abs() < 1e-12 && rep.hyp.upper < 1.0);
        assert!((rep.concl.unwrap().lower - 0.999).abs() < 1e-12);
    }

    #[test]
    fn unmet_hypothesis_is_inconclusive() {
        let f = SeriesA::from_tail(1, &[c(1.0, 0.0)]).unwrap();
        let p = Params::new(1, 0.0, c(0.0, 0.0));
        let rep = check(TheoremId::Thm1, &f, &p, &CheckConfig::default()).unwrap();
        assert_eq!(rep.verdict.state, VerdictState::Inconclusive);
        assert!(rep.verdict.hypothesis_margin.unwrap() < 0.0);
        // f/z = 1 + z vanishes near z = -1: the guard sup is ~0.999 < 1, so the quotient is sampled.
        assert!(rep.concl.is_some());
    }

    #[test]
    fn failing_guard_skips_the_quotient() {
        let f = SeriesA::from_tail(1, &[c(2.0, 0.0)]).unwrap();
        let p = Params::new(1, 0.0, c(0.0, 0.0));
        let rep = check(TheoremId::Thm1, &f, &p, &CheckConfig::default()).unwrap();
        assert_eq!(rep.verdict.state, VerdictState::Inconclusive);
        assert!(rep.concl.is_none() && rep.verdict.conclusion_margin.is_none());
    }

    #[test]
    fn slack_turns_edge_cases_inconclusive() {
        let f = SeriesA::from_tail(1, &[c(1.0 / 3.0, 0.0)]).unwrap();
        let p = Params::new(1, 0.5, c(0.0, 0.0));
        let cfg = CheckConfig { slack: 1e-2, ..CheckConfig::default() };
        let rep = check(TheoremId::Thm1, &f, &p, &cfg).unwrap();
        assert_eq!(rep.verdict.state, VerdictState::Inconclusive);
    }

    #[test]
    fn class_index_must_match() {
        let f = SeriesA::identity(2).unwrap();
        let p = Params::new(1, 0.5, c(0.0, 0.0));
        assert!(matches!(check(TheoremId::Thm1, &f, &p, &CheckConfig::default()), Err(Error::Parameter(_))));
    }

    #[test]
    fn theorem_names_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.name().parse::<TheoremId>().unwrap(), t);
            let json = serde_json::to_string(&t).unwrap();
            assert_eq!(json, format!("\"{}\"", t.name()));
        }
        assert!("thm9".parse::<TheoremId>().is_err());
    }
}
