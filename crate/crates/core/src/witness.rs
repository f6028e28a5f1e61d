//! Extremal examples, randomized hypothesis-satisfying samples, the falsifier
//! loop, and bisection for the largest subdisk on which a hypothesis holds.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::checks::{check, threshold, CheckConfig, CheckReport, Params, TheoremId, VerdictState};
use crate::error::{Error, Result};
use crate::functionals::as_polynomial;
use crate::series::SeriesA;
use crate::sup::{coeff_bound, poly_sup, GridSpec};

/// Width at which [`radius_of_validity`] stops bisecting.
pub const RADIUS_TOLERANCE: f64 = 1e-6;
/// Smallest scale tried by [`radius_of_validity`].
const RADIUS_FLOOR: f64 = 1.0 / (1u64 << 30) as f64;
/// Grid densification used to confirm a `Fails` verdict.
const FAIL_RECHECK_FACTOR: usize = 16;

/// The monomial perturbations `z + c z^{n+1}` that make the bounds sharp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessId {
    /// `c = (1 - alpha) / (n + 1 - alpha)`, extremal for starlikeness.
    Ex1,
    /// `c = (1 - alpha) / (n + 1)`, extremal for bounded turning.
    Ex2,
    /// `c = alpha / (n + 1)`, extremal for the lower branch of the `1/f'` criterion.
    Ex3,
}

impl WitnessId {
    pub const ALL: [WitnessId; 3] = [WitnessId::Ex1, WitnessId::Ex2, WitnessId::Ex3];

    pub fn theorem(self) -> TheoremId {
        match self {
            WitnessId::Ex1 => TheoremId::Thm1,
            WitnessId::Ex2 => TheoremId::Thm2,
            WitnessId::Ex3 => TheoremId::Thm3,
        }
    }

    fn validate(self, n: usize, alpha: f64) -> Result<()> {
        if n == 0 {
            return Err(Error::Parameter("n must be at least 1".into()));
        }
        let ok = match self {
            WitnessId::Ex1 | WitnessId::Ex2 => (0.0..1.0).contains(&alpha),
            WitnessId::Ex3 => alpha > 0.0 && alpha <= 0.5,
        };
        if ok {
            Ok(())
        } else {
            let range = if self == WitnessId::Ex3 { "0 < alpha <= 1/2" } else { "0 <= alpha < 1" };
            Err(Error::Parameter(format!("{self:?} needs {range}, got alpha = {alpha}")))
        }
    }

    /// The perturbation coefficient `c`.
    pub fn coefficient(self, n: usize, alpha: f64) -> Result<f64> {
        self.validate(n, alpha)?;
        let n = n as f64;
        Ok(match self {
            WitnessId::Ex1 => (1.0 - alpha) / (n + 1.0 - alpha),
            WitnessId::Ex2 => (1.0 - alpha) / (n + 1.0),
            WitnessId::Ex3 => alpha / (n + 1.0),
        })
    }
}

/// The extremal example matching `theorem` at order `alpha`, if there is one.
///
/// The upper branch (`alpha > 1/2`) of the `1/f'` criterion shares its
/// threshold `(1 - alpha)|n - beta|` with bounded turning, so it reuses `Ex2`.
pub fn witness_for(theorem: TheoremId, alpha: f64) -> Option<WitnessId> {
    match theorem {
        TheoremId::Thm1 => Some(WitnessId::Ex1),
        TheoremId::Thm2 => Some(WitnessId::Ex2),
        TheoremId::Thm3 if alpha <= 0.5 => Some(WitnessId::Ex3),
        TheoremId::Thm3 => Some(WitnessId::Ex2),
        _ => None,
    }
}

pub fn make_witness(id: WitnessId, n: usize, alpha: f64) -> Result<SeriesA> {
    let c = id.coefficient(n, alpha)?;
    SeriesA::from_tail(n, &[Complex64::new(c, 0.0)])
}

/// Exact suprema on the circle `|z| = r` of a witness's hypothesis and conclusion functionals.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosedForms {
    pub hyp_sup: f64,
    pub concl_sup: f64,
}

/// For `f = z + c z^{n+1}`: `T`-sup `n c r^n |n+1-beta|` with star-quotient sup
/// `n c r^n / (1 - c r^n)` (Ex1), or `U`-sup `(n+1) c r^n |n-beta|` with
/// `|f' - 1|`-sup `(n+1) c r^n` (Ex2, Ex3).
pub fn witness_closed_forms(id: WitnessId, n: usize, alpha: f64, beta: Complex64, r: f64) -> Result<ClosedForms> {
    let c = id.coefficient(n, alpha)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::Input(format!("radius r = {r} must lie in (0, 1)")));
    }
    let nf = n as f64;
    let crn = c * r.powi(n as i32);
    Ok(match id {
        WitnessId::Ex1 => ClosedForms {
            hyp_sup: nf * crn * (nf + 1.0 - beta).norm(),
            concl_sup: nf * crn / (1.0 - crn),
        },
        WitnessId::Ex2 | WitnessId::Ex3 => ClosedForms {
            hyp_sup: (nf + 1.0) * crn * (nf - beta).norm(),
            concl_sup: (nf + 1.0) * crn,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FalsifyConfig {
    pub trials: usize,
    pub seed: u64,
    /// Fraction of the threshold the sampled hypothesis sup is scaled to.
    pub margin: f64,
    /// Number of random coefficients `a_{n+1}, ..., a_{n+tail_len}`.
    pub tail_len: usize,
    pub r_max: f64,
    pub grid: GridSpec,
}

impl Default for FalsifyConfig {
    fn default() -> Self {
        Self { trials: 1000, seed: 0, margin: 0.9, tail_len: 4, r_max: 0.999, grid: GridSpec::default() }
    }
}

impl FalsifyConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Input("at least one trial is required".into()));
        }
        if !(self.margin > 0.0 && self.margin < 1.0) {
            return Err(Error::Input(format!("margin = {} must lie in (0, 1)", self.margin)));
        }
        Ok(())
    }

    fn check_config(&self) -> CheckConfig {
        CheckConfig { grid: self.grid.clone(), r_max: self.r_max, ..CheckConfig::default() }
    }
}

/// Random stream for trial `index`, independent of the order trials run in.
pub fn trial_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Draws a tail in the square `[-1, 1]^2` and scales it so that the
/// coefficient bound of the hypothesis polynomial on the closed unit disk is
/// at most `margin * threshold`.
pub fn sample_satisfying<R: Rng + ?Sized>(
    theorem: TheoremId,
    n: usize,
    params: &Params,
    cfg: &FalsifyConfig,
    rng: &mut R,
) -> Result<SeriesA> {
    cfg.validate()?;
    let limit = cfg.margin * threshold(theorem, params)?;
    let tail: Vec<Complex64> = (0..cfg.tail_len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0)))
        .collect();
    let raw = SeriesA::from_tail(n, &tail)?;
    let bound = coeff_bound(&as_polynomial(theorem.hypothesis_functional(), &raw, params.beta)?, 1.0);
    if bound > limit {
        let scale = limit / bound;
        let scaled: Vec<Complex64> = tail.iter().map(|&a| a * scale).collect();
        SeriesA::from_tail(n, &scaled)
    } else {
        Ok(raw)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub trial: usize,
    pub function: SeriesA,
    pub report: CheckReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FalsifySummary {
    pub theorem: TheoremId,
    pub params: Params,
    pub trials: usize,
    pub holds: usize,
    pub inconclusive: usize,
    pub fails: usize,
    /// Smallest `bound - conclusion value` over trials that produced one.
    pub min_conclusion_margin: Option<f64>,
    pub counterexamples: Vec<Counterexample>,
}

impl FalsifySummary {
    fn empty(theorem: TheoremId, params: Params) -> Self {
        Self {
            theorem,
            params,
            trials: 0,
            holds: 0,
            inconclusive: 0,
            fails: 0,
            min_conclusion_margin: None,
            counterexamples: Vec::new(),
        }
    }

    /// Combines two partial summaries of the same run; associative.
    pub fn merge(mut self, other: FalsifySummary) -> FalsifySummary {
        self.trials += other.trials;
        self.holds += other.holds;
        self.inconclusive += other.inconclusive;
        self.fails += other.fails;
        self.min_conclusion_margin = match (self.min_conclusion_margin, other.min_conclusion_margin) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.counterexamples.extend(other.counterexamples);
        self.counterexamples.sort_by_key(|c| c.trial);
        self
    }
}

fn run_trial(
    theorem: TheoremId,
    params: &Params,
    cfg: &FalsifyConfig,
    check_cfg: &CheckConfig,
    index: usize,
) -> Result<FalsifySummary> {
    let mut rng = trial_rng(cfg.seed, index as u64);
    let f = sample_satisfying(theorem, params.n, params, cfg, &mut rng)?;
    let mut report = check(theorem, &f, params, check_cfg)?;
    if report.verdict.state == VerdictState::Fails {
        let dense = CheckConfig { grid: check_cfg.grid.densified(FAIL_RECHECK_FACTOR), ..check_cfg.clone() };
        report = check(theorem, &f, params, &dense)?;
    }
    let mut out = FalsifySummary::empty(theorem, *params);
    out.trials = 1;
    out.min_conclusion_margin = report.verdict.conclusion_margin;
    match report.verdict.state {
        VerdictState::Holds => out.holds = 1,
        VerdictState::Inconclusive => out.inconclusive = 1,
        VerdictState::Fails => {
            out.fails = 1;
            out.counterexamples.push(Counterexample { trial: index, function: f, report });
        }
    }
    Ok(out)
}

/// Runs `cfg.trials` hypothesis-satisfying samples through [`check`].
///
/// A trial that comes back `Fails` is re-checked on a 16x denser grid and
/// only counted as a failure if the denser check agrees.
pub fn falsify(theorem: TheoremId, n: usize, params: &Params, cfg: &FalsifyConfig) -> Result<FalsifySummary> {
    cfg.validate()?;
    let params = Params { n, ..*params };
    threshold(theorem, &params)?;
    let check_cfg = cfg.check_config();
    check_cfg.validate()?;
    (0..cfg.trials).try_fold(FalsifySummary::empty(theorem, params), |acc, i| {
        Ok(acc.merge(run_trial(theorem, &params, cfg, &check_cfg, i)?))
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusReport {
    pub theorem: TheoremId,
    /// Largest scale `r` found with the hypothesis certified for `f(r z)/r`.
    pub r_star: f64,
    pub iterations: usize,
    pub bracket_width: f64,
    /// The hypothesis already holds at `r = 1`; `r_star` is the sentinel `1`.
    pub saturated: bool,
    /// The hypothesis fails even at the smallest scale; `r_star` is the sentinel `0`.
    pub vacuous: bool,
    /// Circle on which the hypothesis of each scaled function was certified.
    pub probe_radius: f64,
}

/// Bisects the scale `r` in `f_r(z) = f(r z)/r` for the largest `r` at which
/// the hypothesis of `theorem` is certified on the circle `|z| = probe_radius`.
pub fn radius_of_validity(
    theorem: TheoremId,
    f: &SeriesA,
    params: &Params,
    grid: &GridSpec,
    probe_radius: f64,
) -> Result<RadiusReport> {
    if !(probe_radius > 0.0 && probe_radius <= 1.0) {
        return Err(Error::Input(format!("probe radius {probe_radius} must lie in (0, 1]")));
    }
    grid.validate()?;
    let limit = threshold(theorem, params)?;
    let certified = |r: f64| -> Result<bool> {
        let scaled = f.scale_radius(r)?;
        let hyp = as_polynomial(theorem.hypothesis_functional(), &scaled, params.beta)?;
        Ok(poly_sup(&hyp, probe_radius, grid)?.upper < limit)
    };
    let report = |r_star, iterations, bracket_width, saturated, vacuous| RadiusReport {
        theorem,
        r_star,
        iterations,
        bracket_width,
        saturated,
        vacuous,
        probe_radius,
    };

    if certified(1.0)? {
        return Ok(report(1.0, 0, 0.0, true, false));
    }
    if !certified(RADIUS_FLOOR)? {
        return Ok(report(0.0, 0, RADIUS_FLOOR, false, true));
    }
    let (mut lo, mut hi) = (RADIUS_FLOOR, 1.0);
    let mut iterations = 0;
    while hi - lo > RADIUS_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if certified(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(report(lo, iterations, hi - lo, false, false))
}
