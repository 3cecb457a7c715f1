use std::fmt;

use thiserror::Error;

/// Errors produced by the graph, labeling, lifting and search operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(Violation),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A lift produced output that failed its own verification. The
    /// construction is supposed to make this impossible, so reaching it is a
    /// counterexample worth keeping.
    #[error("construction failed verification: {0}")]
    TheoremViolationWitness(String),

    #[error("configuration error: {0}")]
    ConfigError(String),

    #[error("label arithmetic overflows the label type: {0}")]
    LabelOverflow(String),
}

/// The named condition behind a [`Error::PreconditionViolated`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Graph is not regular of positive even degree.
    NotTwoRRegular,
    /// Copy count is even; an even number of copies of a 2r-regular graph is
    /// never edge graceful.
    EvenCopyCount {
        k: u64,
    },
    /// `gcd(r, kp) != 1`.
    NotCoprime {
        r: u64,
        kp: u64,
        gcd: u64,
    },
    /// Base labeling is not an edge-graceful labeling of the base graph.
    InvalidBaseLabeling(String),
    InvalidStriation(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotTwoRRegular => {
                write!(f, "graph is not 2r-regular with r >= 1")
            }
            Violation::EvenCopyCount { k } => write!(f, "copy count k = {k} must be odd"),
            Violation::NotCoprime { r, kp, gcd } => {
                write!(
                    f,
                    "coprimality: gcd(r, kp) = gcd({r}, {kp}) = {gcd}, expected 1"
                )
            }
            Violation::InvalidBaseLabeling(why) => write!(f, "base labeling invalid: {why}"),
            Violation::InvalidStriation(why) => write!(f, "striation invalid: {why}"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
