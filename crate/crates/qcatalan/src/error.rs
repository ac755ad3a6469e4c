//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational function was built with a zero denominator.
    ZeroDenominator,
    /// A fractional q-power was requested at a root order that does not
    /// support it (the exponent denominator must divide the root order).
    IncompatibleRoot { root: u32, required: u32 },
    /// The normalized denominator vanishes at q = 1; the value has no
    /// rational q -> 1 limit.
    PoleAtOne,
    /// Series reciprocal of a series whose leading coefficient vanishes.
    NotInvertible,
    /// Evaluation at t = q^a of a bivariate series that is genuinely
    /// truncated in t; the result would silently miss contributions.
    TIncomplete { trunc_t: i64 },
    /// A computation needs a coefficient outside the resolved window.
    InsufficientTruncation { what: &'static str, index: (i64, i64) },
    /// A dual-coefficient window does not dominate the requested output.
    InsufficientWindow { needed: (i64, i64), have: (i64, i64) },
    /// Substitution of a series with nonzero constant term where powers
    /// must raise the grade.
    IllGradedSubstitution,
    /// Operator-side computation on a Catalan series whose associated
    /// numerator is not polynomial in t; coefficients would leave the
    /// rational-function field.
    RequiresPolynomialT,
    /// Continued-fraction depth too small for the requested order.
    InsufficientDepth { depth: i64, order: i64 },
    /// Precondition failure described in the message.
    Domain(String),
    /// Expression syntax error at a byte offset.
    Parse { offset: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "malformed value: zero denominator"),
            Error::IncompatibleRoot { root, required } => write!(
                f,
                "incompatible root order: have q^(1/{root}), need a multiple of {required}"
            ),
            Error::PoleAtOne => write!(f, "pole at q = 1"),
            Error::NotInvertible => write!(f, "series is not invertible: leading coefficient is zero"),
            Error::TIncomplete { trunc_t } => write!(
                f,
                "t-incomplete evaluation: series is only resolved to t-degree {trunc_t}"
            ),
            Error::InsufficientTruncation { what, index } => write!(
                f,
                "insufficient truncation: {what} is unresolved at index ({}, {})",
                index.0, index.1
            ),
            Error::InsufficientWindow { needed, have } => write!(
                f,
                "insufficient dual-coefficient window: need ({}, {}), have ({}, {})",
                needed.0, needed.1, have.0, have.1
            ),
            Error::IllGradedSubstitution => {
                write!(f, "substituted series must have zero constant term")
            }
            Error::RequiresPolynomialT => {
                write!(f, "operation requires the associated series to be polynomial in t")
            }
            Error::InsufficientDepth { depth, order } => write!(
                f,
                "continued fraction depth {depth} is below the requested order {order}"
            ),
            Error::Domain(msg) => write!(f, "{msg}"),
            Error::Parse { offset, message } => write!(f, "parse error at offset {offset}: {message}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
