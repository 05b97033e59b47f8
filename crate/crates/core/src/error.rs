//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

use crate::error_model::ErrorAxis;

/// Errors raised by pulse builders and analyses.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input value violates a basic precondition (non-finite angle,
    /// undersized grid, and so on).
    InvalidParameter(String),
    /// A closed-form builder was asked for a target outside the domain of one
    /// of its formulas. `formula` names the offending expression.
    Domain {
        formula: &'static str,
        detail: String,
    },
    /// The target rotation makes a builder formula degenerate (division by
    /// zero), e.g. SCROFULOUS at θ = 0.
    DegenerateTarget(String),
    /// A concatenation recipe pairs an outer pulse with an inner pulse that
    /// does not preserve the elementary error structure on the required axis.
    RecipeInvalid { axis: ErrorAxis, detail: String },
    /// A sequence contains a negative rotation angle where only non-negative
    /// angles are meaningful (operation time cost).
    NegativeAngle { index: usize, theta: f64 },
    /// A robustness-order fit had no samples above the double-precision
    /// infidelity floor.
    DegenerateFit,
    /// An unrecognized pulse or CCCP name.
    UnknownName(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Domain { formula, detail } => {
                write!(f, "domain error in {formula}: {detail}")
            }
            Error::DegenerateTarget(msg) => write!(f, "degenerate target: {msg}"),
            Error::RecipeInvalid { axis, detail } => {
                write!(f, "invalid concatenation recipe ({axis} axis): {detail}")
            }
            Error::NegativeAngle { index, theta } => {
                write!(f, "negative rotation angle {theta} at pulse {index}")
            }
            Error::DegenerateFit => {
                write!(
                    f,
                    "robustness fit degenerate: all samples below the infidelity floor"
                )
            }
            Error::UnknownName(name) => write!(f, "unknown pulse name: {name}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
