//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// Spline construction or evaluation with an inconsistent knot vector.
    #[error("invalid spline: {0}")]
    InvalidCurve(String),

    /// A geometry that violates a well-formedness constraint. The optimizer
    /// maps this onto its worst-value sentinel instead of aborting.
    #[error("infeasible geometry: {0}")]
    InfeasibleGeometry(String),

    /// Bad user input that is not a geometry problem (unknown baseline kind,
    /// malformed config, missing preset).
    #[error("usage error: {0}")]
    Usage(String),

    /// Conductor discretization failure.
    #[error("meshing error: {0}")]
    Meshing(String),

    /// Linear-system or field-evaluation failure in the electrostatic solver.
    #[error("solver error: {0}")]
    Solver(String),

    /// A solver/grid configuration that cannot deliver the requested output.
    #[error("configuration error: {0}")]
    Config(String),

    /// No physical solution exists (e.g. transmon quadratic with negative
    /// discriminant).
    #[error("no solution: {0}")]
    NoSolution(String),

    /// Optimizer-level failure (systematically failing objective, bad space).
    #[error("optimizer error: {0}")]
    Optimizer(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Serde(String),
}

impl From<serde_json::Error> for CoreError {
    fn from(e: serde_json::Error) -> Self {
        CoreError::Serde(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
