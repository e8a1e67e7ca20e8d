use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// A named counting inequality that failed at runtime, plus the steps that led there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub inequality: String,
    pub trace: Vec<String>,
}

impl Violation {
    pub fn new(inequality: impl Into<String>) -> Self {
        Violation { inequality: inequality.into(), trace: Vec::new() }
    }

    pub fn with_trace(inequality: impl Into<String>, trace: Vec<String>) -> Self {
        Violation { inequality: inequality.into(), trace }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.inequality)?;
        if !self.trace.is_empty() {
            write!(f, " [trace: {}]", self.trace.join(" -> "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidGraph(String),
    #[error("not linear: edges {0} and {1} share at least two vertices")]
    NotLinear(usize, usize),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("failed after {tries} tries: {reason}")]
    FailedAfterRetries { tries: u32, reason: String },
    #[error("precondition violated: {0}")]
    PreconditionViolated(Box<Violation>),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn precondition(v: Violation) -> Self {
        Error::PreconditionViolated(Box::new(v))
    }

    pub fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
