use alloc::string::String;
use core::fmt;

/// Errors produced by the algebra layer.
///
/// `OutOfScope` marks inputs the computable fragment deliberately refuses
/// (e.g. generic-point operations on presentations with a nonzero even
/// ideal); everything else is a precondition violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Mixing values over distinct coefficient fields.
    FieldMismatch,
    /// Mixing values over rings with different generator counts.
    ArityMismatch { expected: usize, found: usize },
    /// An operation that requires a nonzero input received zero.
    ZeroInput(&'static str),
    /// A relation or generator that must be parity-homogeneous is not.
    Inhomogeneous(String),
    /// The presented superalgebra is zero (1 lies in the relation ideal).
    ZeroSuperalgebra,
    /// The even quotient ideal is nonzero, so generic-point operations
    /// (localization at K(X)) are unavailable.
    EvenIdealNonzero,
    /// More odd generators than the supported cap.
    TooManyOddVariables { n: usize, cap: usize },
    /// Element is not invertible (its even-constant part vanishes).
    NotInvertible(String),
    /// A basement list that is not a valid antichain of nonempty subsets.
    InvalidBasement(&'static str),
    /// A structural invariant failed; indicates a bug, not bad input.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::FieldMismatch => write!(f, "coefficient fields differ"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "generator count mismatch: expected {expected}, found {found}")
            }
            Error::ZeroInput(what) => write!(f, "{what} must be nonzero"),
            Error::Inhomogeneous(what) => {
                write!(f, "element is not parity-homogeneous: {what}")
            }
            Error::ZeroSuperalgebra => {
                write!(f, "the presented superalgebra is zero (1 lies in the relation ideal)")
            }
            Error::EvenIdealNonzero => write!(
                f,
                "J\u{0304} \u{2260} 0: generic-point operations unavailable"
            ),
            Error::TooManyOddVariables { n, cap } => {
                write!(f, "{n} odd generators exceeds the supported cap of {cap}")
            }
            Error::NotInvertible(what) => write!(f, "not invertible: {what}"),
            Error::InvalidBasement(why) => write!(f, "invalid basement: {why}"),
            Error::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

impl core::error::Error for Error {}
