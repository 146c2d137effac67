//! Error type shared by all modules.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two sets from different ambient groups were combined.
    GroupMismatch,
    /// An integer-window operation produced an element outside [-W, W].
    WindowOverflow { value: i64, halfwidth: i64 },
    /// A requested size is outside the valid range for the carrier.
    SizeOutOfRange { size: usize, carrier: usize },
    /// An element lies outside the group carrier.
    ElementOutOfRange(String),
    /// The operation needs a nonempty set.
    EmptySet,
    /// The statistic is undefined for the given set (e.g. mu on |A| <= 1).
    Degenerate(String),
    /// An enumeration exceeded the configured cap.
    CapExceeded(String),
    /// An operation's stated hypothesis does not hold for the input.
    HypothesisViolated(String),
    /// The set is not symmetric with 0 (required by the identity checks).
    NotSymmetric,
    /// A step function must not be identically zero.
    ZeroFunction,
    /// Malformed parameter (bad k, delta out of range, unsupported group, ...).
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroupMismatch => write!(f, "sets belong to different groups"),
            Error::WindowOverflow { value, halfwidth } => {
                write!(f, "value {value} escapes integer window [-{halfwidth}, {halfwidth}]")
            }
            Error::SizeOutOfRange { size, carrier } => {
                write!(f, "size {size} out of range for carrier of {carrier} elements")
            }
            Error::ElementOutOfRange(s) => write!(f, "element out of range: {s}"),
            Error::EmptySet => write!(f, "operation requires a nonempty set"),
            Error::Degenerate(s) => write!(f, "degenerate input: {s}"),
            Error::CapExceeded(s) => write!(f, "enumeration cap exceeded: {s}"),
            Error::HypothesisViolated(s) => write!(f, "hypothesis violated: {s}"),
            Error::NotSymmetric => write!(f, "set must contain 0 and equal its negation"),
            Error::ZeroFunction => write!(f, "step function is identically zero"),
            Error::InvalidParameter(s) => write!(f, "invalid parameter: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
