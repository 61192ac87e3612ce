//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsing, evaluation, quadrature and the analysis layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed expression text. `position` is a 1-based byte column.
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    /// The expression is well-formed but invalid on (0, inf), e.g. a
    /// denominator that vanishes somewhere on the half-line.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation produced a non-finite value or was called outside (0, inf).
    #[error("evaluation error at x = {x}: {reason}")]
    Eval { x: f64, reason: &'static str },

    /// Symbolic differentiation exceeded the node budget.
    #[error("expression too large: {nodes} nodes exceeds the cap of {cap}")]
    SizeCap { nodes: usize, cap: usize },

    /// The adaptive integrator could not produce a usable value.
    #[error("quadrature failed: {0}")]
    Quadrature(String),

    /// A moment matrix was not numerically positive definite.
    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// Invalid discretization grid.
    #[error("invalid grid: {0}")]
    Grid(String),

    /// Invalid operator specification.
    #[error("invalid operator: {0}")]
    Operator(String),

    /// Invalid analysis problem (precondition violated).
    #[error("invalid problem: {0}")]
    Problem(String),

    /// Job configuration could not be read or validated.
    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
