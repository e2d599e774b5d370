//! Unified error type for every fallible operation in the crate.
//!
//! Each variant maps to a stable process exit code (see [`Error::exit_code`])
//! so shell scripts driving the `plausible` binary can branch on failure
//! class without parsing messages.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A prior assigned probability 0 or 1 to an empirical hypothesis.
    /// Certainty cannot be revised by any evidence, so such priors are
    /// rejected at construction.
    #[error("cromwell violation: prior mass at theta = 1 must lie strictly inside (0, 1), got {w}")]
    CromwellViolation { w: f64 },

    /// Conditioning on an event of probability zero is undefined.
    #[error("zero-probability condition: {0} has total probability 0")]
    ZeroProbabilityCondition(String),

    /// Every `prior * likelihood` product vanished: the observed evidence
    /// is impossible under every hypothesis in the support.
    #[error("total evidence zero: all prior*likelihood products vanish")]
    TotalEvidenceZero,

    /// `Infinite * 0` has no meaningful value in the extended nonnegative reals.
    #[error("indeterminate product: Infinite * 0 is undefined")]
    IndeterminateProduct,

    /// Confidence constructions are undefined on an empty record
    /// ("all of zero observations are successes" earns no confidence).
    #[error("vacuous evidence: confidence quantities require at least one observation")]
    VacuousEvidence,

    /// An iterative numeric routine failed to reach its tolerance.
    /// This signals a special-function bug, not a user error.
    #[error("convergence failure in {what}: residual {residual:e} after {iterations} iterations")]
    Convergence {
        what: &'static str,
        residual: f64,
        iterations: usize,
    },

    /// A moment target lies outside (or exactly on the edge of) the
    /// achievable hull of its constraint function.
    #[error("infeasible constraint {index}: target {target} outside achievable hull [{lo}, {hi}]")]
    InfeasibleConstraint {
        index: usize,
        target: f64,
        lo: f64,
        hi: f64,
    },

    /// The maxent solver hit its iteration cap before reaching tolerance.
    #[error("maxent did not converge: best residual {best_residual:e} after {iterations} iterations (tol {tol:e})")]
    MaxEntNonconvergence {
        best_residual: f64,
        iterations: usize,
        tol: f64,
    },

    /// Malformed input text (observation streams, problem files, joint tables).
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Shorthand constructor for [`Error::Domain`].
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// Shorthand constructor for [`Error::Parse`].
    pub fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }

    /// Stable exit-code map used by the command-line binary:
    /// 0 ok, 2 I/O, 3 domain/Cromwell, 4 numeric, 5 parse,
    /// 6 infeasible, 7 nonconvergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 2,
            Error::Domain(_)
            | Error::CromwellViolation { .. }
            | Error::ZeroProbabilityCondition(_)
            | Error::TotalEvidenceZero
            | Error::IndeterminateProduct
            | Error::VacuousEvidence => 3,
            Error::Convergence { .. } => 4,
            Error::Parse { .. } => 5,
            Error::InfeasibleConstraint { .. } => 6,
            Error::MaxEntNonconvergence { .. } => 7,
        }
    }
}
