//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("{op}: shape mismatch between {lhs:?} and {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },

    /// A caller violated an operation's contract (bad argument, wrong state).
    #[error("contract violation: {0}")]
    Contract(String),

    /// An iterative numerical routine failed to converge.
    #[error("{what} did not converge: residual {residual:.3e} after {iterations} iterations")]
    Numerical {
        what: &'static str,
        residual: f64,
        iterations: usize,
    },

    /// Invalid run configuration.
    #[error("config error: {0}")]
    Config(String),

    /// The parameter budget was not reached within the step cap.
    #[error(
        "budget unreachable: live parameter count {live} still above target {target} \
         after {steps} steps; raise gamma or the threshold learning rate"
    )]
    BudgetUnreachable {
        steps: usize,
        live: usize,
        target: usize,
    },

    /// Dataset loading or validation failed.
    #[error("data error: {0}")]
    Data(String),

    /// Checkpoint serialization or validation failed.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn data(msg: impl Into<String>) -> Self {
        Error::Data(msg.into())
    }

    pub fn checkpoint(msg: impl Into<String>) -> Self {
        Error::Checkpoint(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    /// Process exit status for the CLI: 0 success, 2 config, 3 budget, 4 data, 5 checkpoint.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) => 2,
            Error::BudgetUnreachable { .. } => 3,
            Error::Data(_) => 4,
            Error::Checkpoint(_) => 5,
            _ => 1,
        }
    }
}
