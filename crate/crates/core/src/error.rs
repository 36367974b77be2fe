use alloc::string::String;
use core::fmt;

use crate::closure::ValidationReport;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values were built over different universes or chains.
    CarrierMismatch,
    /// The chain denominator must be at least 1.
    EmptyChain,
    EmptyUniverse,
    DuplicateElement(String),
    UnknownElement(String),
    /// A membership string that is not a value `k/D` of the chain.
    InvalidLevel(String),
    /// A grade vector of the wrong length or with a value above the top level.
    MalformedSet,
    /// An operator description that does not fit its carrier.
    MalformedOperator(String),
    /// Enumerating the carrier would exceed the configured budget.
    Budget { required: u128, limit: usize },
    /// The operator fails the closure axioms.
    Invalid(ValidationReport),
    NotValidated,
    /// A construction received inputs it cannot combine.
    Construction(String),
    /// Corpus parameters that cannot be represented.
    Unrepresentable(String),
    /// A decider produced verdicts that contradict a proven implication.
    Inconsistent(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CarrierMismatch => write!(f, "values belong to different universes or chains"),
            Error::EmptyChain => write!(f, "chain denominator must be at least 1"),
            Error::EmptyUniverse => write!(f, "universe must be non-empty"),
            Error::DuplicateElement(name) => write!(f, "duplicate element `{name}`"),
            Error::UnknownElement(name) => write!(f, "unknown element `{name}`"),
            Error::InvalidLevel(text) => write!(f, "`{text}` is not a level of the chain"),
            Error::MalformedSet => write!(f, "malformed fuzzy set"),
            Error::MalformedOperator(msg) => write!(f, "malformed operator: {msg}"),
            Error::Budget { required, limit } => write!(
                f,
                "enumeration needs {required} fuzzy sets, budget is {limit}"
            ),
            Error::Invalid(report) => write!(
                f,
                "operator is not a Čech fuzzy closure operator ({} violations)",
                report.violations().len()
            ),
            Error::NotValidated => write!(f, "space has not been validated"),
            Error::Construction(msg) => write!(f, "construction failed: {msg}"),
            Error::Unrepresentable(msg) => write!(f, "unrepresentable parameters: {msg}"),
            Error::Inconsistent(msg) => write!(f, "inconsistent verdicts: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
