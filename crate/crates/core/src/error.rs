use thiserror::Error;

/// Errors raised by the polynomial kernel, the generators and the certifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("exponent deficit at x{}: need at least {needed}, got {available}", .var + 1)]
    ExponentDeficit { var: usize, needed: u32, available: u32 },

    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("expected a homogeneous polynomial of degree {expected}")]
    WrongDegree { expected: u32 },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
