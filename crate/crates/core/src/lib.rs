//! Numerical verification of sufficient conditions for analytic functions on
//! the unit disk to be starlike, convex, or of bounded turning of order `alpha`.
//!
//! Functions are truncated power series `f(z) = z + a_{n+1} z^{n+1} + ...`
//! ([`SeriesA`]). Hypotheses of the form `sup |z f'' - beta (f' - f/z)| < bound`
//! are certified with two-sided sup brackets ([`SupBracket`]) on circles
//! `|z| = r`; conclusions are sampled on the same circles and the outcome is
//! reported as a three-valued [`VerdictState`].

#![forbid(unsafe_code)]

pub mod checks;
pub mod cli;
mod error;
mod float_serde;
pub mod functionals;
pub mod series;
pub mod sup;
pub mod witness;

pub use checks::{
    check, duality_check, jack_probe, membership, threshold, CheckConfig, CheckReport, ClassId,
    DualityReport, JackReport, MembershipReport, Params, TheoremId, Verdict, VerdictState,
};
pub use error::{Error, Result};
pub use functionals::{as_polynomial, eval_functional, Functional};
pub use series::{PolySeries, SeriesA};
pub use sup::{circle_max, coeff_bound, disk_sup_profile, poly_sup, BracketKind, GridSpec, SupBracket};
pub use witness::{
    falsify, make_witness, radius_of_validity, sample_satisfying, witness_closed_forms, witness_for,
    FalsifyConfig, FalsifySummary, RadiusReport, WitnessId,
};

/// Complex scalar used for `z`, `beta` and every coefficient.
pub type Complex = num_complex::Complex64;
