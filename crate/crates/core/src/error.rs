use num_complex::Complex64;
use thiserror::Error;

use crate::functionals::Functional;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed or non-finite input to a numerical routine.
    #[error("invalid input: {0}")]
    Input(String),

    /// Theorem or class parameters outside the admissible range.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{0:?} is a rational functional and has no polynomial form")]
    NotPolynomial(Functional),

    /// A quotient functional was evaluated where its denominator (nearly) vanishes.
    #[error("singular denominator at z = {}{:+}i (|denominator| = {modulus:e})", z.re, z.im)]
    SingularDenominator { z: Complex64, modulus: f64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
