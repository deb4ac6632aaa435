use std::time::Duration;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    ZeroDenominator,

    #[error("parameter domain violation: {0}")]
    Domain(String),

    #[error("graph would have {requested} vertices, cap is {cap}")]
    VertexCap { requested: u128, cap: usize },

    #[error("search timed out after {0:?}")]
    Timeout(Duration),

    #[error("method {method} does not apply: {reason}")]
    Inapplicable { method: String, reason: String },

    #[error("missing operand value for {0}")]
    MissingOperand(String),

    #[error("grid has {points} points, cap is {cap}")]
    GridTooLarge { points: usize, cap: usize },

    #[error("solver did not converge within {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("malformed input at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn inapplicable(method: impl ToString, reason: impl Into<String>) -> Self {
        Error::Inapplicable {
            method: method.to_string(),
            reason: reason.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
