use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
#[non_exhaustive]
pub enum Error {
    /// Edge endpoint out of range, or a self-loop.
    InvalidEdge { u: usize, v: usize, n: usize },
    InvalidFamilyParam(&'static str),
    InvalidAlpha(f64),
    /// Partial sums are indexed from 1.
    InvalidK(usize),
    InvalidProbability(f64),
    /// A matrix entry was NaN or infinite.
    NumericalInput,
    NoConvergence { sweeps: usize },
    NoClosedForm,
    CorpusTooLarge { n: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidEdge { u, v, n } if u == v => {
                write!(f, "invalid edge ({u}, {v}): self-loops are not allowed")
            }
            Error::InvalidEdge { u, v, n } => {
                write!(f, "invalid edge ({u}, {v}): vertices must be below {n}")
            }
            Error::InvalidFamilyParam(msg) => write!(f, "invalid family parameter: {msg}"),
            Error::InvalidAlpha(a) => write!(f, "alpha {a} is outside the allowed range"),
            Error::InvalidK(k) => write!(f, "partial sum index {k} must be at least 1"),
            Error::InvalidProbability(p) => write!(f, "edge probability {p} is outside [0, 1]"),
            Error::NumericalInput => f.write_str("matrix contains a non-finite entry"),
            Error::NoConvergence { sweeps } => {
                write!(f, "Jacobi iteration did not converge in {sweeps} sweeps")
            }
            Error::NoClosedForm => f.write_str("no closed-form spectrum for this family"),
            Error::CorpusTooLarge { n } => {
                write!(f, "exhaustive enumeration is capped at 7 vertices (asked for {n})")
            }
        }
    }
}

impl core::error::Error for Error {}
