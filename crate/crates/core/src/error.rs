use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument violates a documented precondition.
    InvalidParameter(String),
    /// An iteration hit its cap before meeting the requested tolerance.
    /// `partial` is the best value available at that point.
    NonConvergence { what: &'static str, partial: f64, iterations: usize },
    /// The integrator could not make progress (step size underflow or step cap).
    StepFailure { what: &'static str, at: f64 },
    /// No sign change was found while scanning for a root.
    NoBracket { what: &'static str, lo: f64, hi: f64, samples: usize },
    /// A continued fraction hit a zero denominator.
    Breakdown(&'static str),
    /// An integral that should diverge does (or an improper integral is not finite).
    Divergent(String),
    /// Requested order exceeds the precomputed tables.
    Unsupported { what: &'static str, requested: usize, max: usize },
    /// A hypothesis required by an operation is not met.
    Precondition(String),
    /// The imaginary part left over by a complex evaluation is too large.
    ImaginaryResidue { residue: f64, scale: f64 },
    /// Too few or badly spaced samples for a fit.
    IllConditioned { what: &'static str, condition: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::NonConvergence { what, partial, iterations } => write!(
                f,
                "{what} did not converge after {iterations} iterations (partial value {partial:e})"
            ),
            Error::StepFailure { what, at } => write!(f, "{what}: integrator stalled at {at:e}"),
            Error::NoBracket { what, lo, hi, samples } => write!(
                f,
                "{what}: no sign change on [{lo:e}, {hi:e}] ({samples} samples)"
            ),
            Error::Breakdown(what) => write!(f, "{what}: zero denominator"),
            Error::Divergent(msg) => write!(f, "divergent: {msg}"),
            Error::Unsupported { what, requested, max } => {
                write!(f, "{what}: order {requested} exceeds supported maximum {max}")
            }
            Error::Precondition(msg) => write!(f, "precondition failed: {msg}"),
            Error::ImaginaryResidue { residue, scale } => write!(
                f,
                "imaginary residue {residue:e} too large relative to scale {scale:e}"
            ),
            Error::IllConditioned { what, condition } => {
                write!(f, "{what}: ill-conditioned (condition {condition:e})")
            }
        }
    }
}

impl core::error::Error for Error {}
