//! Error type shared by the whole engine.

use thiserror::Error;

/// Errors raised by coefficient arithmetic, tensor calculus and the checkers.
///
/// Checker verdicts are never errors: a failing condition is reported through
/// a [`crate::report::ConditionReport`]. Errors are reserved for inputs that
/// make an operation meaningless (mismatched charts, poles, degenerate
/// matrices, unmet hypotheses of a lemma).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chart mismatch: [{left}] vs [{right}]")]
    ChartMismatch { left: String, right: String },

    #[error("variable index {index} out of range for a chart of dimension {dim}")]
    BadIndex { index: usize, dim: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("unknown variable '{name}' at line {line}, column {col}")]
    UnknownVariable { name: String, line: usize, col: usize },

    #[error("invalid chart: {0}")]
    InvalidChart(String),

    #[error("degree too small for contraction")]
    DegreeError,

    #[error("degenerate: {0}")]
    Degenerate(String),

    #[error("omega and the endomorphism do not commute; omega_a is not alternating (witness: {witness})")]
    NotAlternating { witness: String },

    #[error("not a symplectic form: {0}")]
    NotSymplectic(String),

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
