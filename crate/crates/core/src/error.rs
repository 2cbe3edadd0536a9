use core::fmt;

/// Everything that can go wrong inside the numerics core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument fell outside the domain of the function.
    Domain { what: &'static str, value: f64 },
    /// A physical or numerical parameter was rejected before any work was done.
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
    },
    /// A hypergeometric series at unit argument has Re(c-a-b) <= 0.
    Divergent { excess: f64 },
    /// An iterative process ran out of budget.
    NonConvergence {
        what: &'static str,
        iterations: usize,
        residual: f64,
    },
    /// Two evaluations that must agree did not.
    Inconsistent {
        what: &'static str,
        lhs: f64,
        rhs: f64,
    },
    /// The integrator produced a non-finite state.
    BlowUp { step: usize, time: f64 },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "{what}: argument {value} outside domain"),
            Error::InvalidParameter { name, reason } => write!(f, "{name} {reason}"),
            Error::Divergent { excess } => {
                write!(f, "series diverges at unit argument (c-a-b = {excess})")
            }
            Error::NonConvergence {
                what,
                iterations,
                residual,
            } => {
                write!(
                    f,
                    "{what} did not converge after {iterations} iterations (residual {residual:e})"
                )
            }
            Error::Inconsistent { what, lhs, rhs } => {
                write!(f, "{what}: {lhs} disagrees with {rhs}")
            }
            Error::BlowUp { step, time } => {
                write!(f, "non-finite state at step {step} (t = {time})")
            }
        }
    }
}

impl core::error::Error for Error {}
