use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the domain of a formula.
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    /// A surface description could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A surface description parsed but violates an invariant.
    #[error("validation error ({invariant}): {detail}")]
    Validation {
        invariant: &'static str,
        detail: String,
    },

    /// The solver had nothing to minimize over.
    #[error("no Cheeger candidate: {0}")]
    NoCandidate(String),

    /// The ODE integrator gave up.
    #[error(
        "integrator failure at tau = {tau}: {reason} (step = {step:e}, accepted = {accepted})"
    )]
    Integrator {
        tau: f64,
        step: f64,
        accepted: usize,
        reason: &'static str,
    },

    /// A bracketing or root search failed.
    #[error("search error: {0}")]
    Search(String),
}

impl Error {
    pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            op,
            reason: reason.into(),
        }
    }

    pub(crate) fn validation(invariant: &'static str, detail: impl Into<String>) -> Self {
        Error::Validation {
            invariant,
            detail: detail.into(),
        }
    }

    /// True for failures of a numerical search, as opposed to bad input.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::Integrator { .. } | Error::Search(_) | Error::NoCandidate(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
