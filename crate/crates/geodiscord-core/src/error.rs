//! Error type shared by all core operations.

use core::fmt;

/// Everything that can go wrong inside the core library.
///
/// Variants carry the measured deviation where that helps callers report
/// which invariant was violated and by how much.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Matrix or state dimensions do not match the operation's requirements.
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    /// A matrix expected to be Hermitian deviates by `max_dev` (max abs of ρ_ij − conj(ρ_ji)).
    NotHermitian {
        max_dev: f64,
    },
    /// A density matrix whose trace deviates from one by `dev`.
    NonUnitTrace {
        dev: f64,
    },
    /// A matrix expected to be positive semidefinite has an eigenvalue `min_eig`
    /// below the allowed tolerance.
    NotPositive {
        min_eig: f64,
    },
    /// A state vector whose norm deviates from one by `dev`.
    NotNormalized {
        dev: f64,
    },
    /// A scalar argument is outside its admissible range.
    OutOfRange {
        what: &'static str,
    },
    /// Critical times only exist in the non-Markovian regime (λ < 2γ₀) at zero detuning.
    NoCriticalTimes,
    /// The ODE oracle would need a step below its floor to converge.
    StepUnderflow,
    /// Catch-all for violated preconditions with a fixed description.
    Invalid(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotHermitian { max_dev } => {
                write!(f, "matrix is not Hermitian (max deviation {max_dev:.3e})")
            }
            Error::NonUnitTrace { dev } => {
                write!(f, "trace differs from 1 by {dev:.3e}")
            }
            Error::NotPositive { min_eig } => {
                write!(f, "matrix is not positive semidefinite (min eigenvalue {min_eig:.3e})")
            }
            Error::NotNormalized { dev } => {
                write!(f, "state vector norm differs from 1 by {dev:.3e}")
            }
            Error::OutOfRange { what } => write!(f, "argument out of range: {what}"),
            Error::NoCriticalTimes => {
                write!(f, "no critical times: requires δ = 0 and λ < 2γ₀ (non-Markovian)")
            }
            Error::StepUnderflow => {
                write!(f, "ODE oracle failed to converge before the step floor 1e-6")
            }
            Error::Invalid(what) => write!(f, "{what}"),
        }
    }
}

impl core::error::Error for Error {}
