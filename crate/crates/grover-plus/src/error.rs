use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Two values with different qubit counts were combined.
    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: u32, right: u32 },

    /// A dense state of this size was refused by the configured cap.
    #[error("{n} qubits exceeds the configured cap of {cap}")]
    ResourceCap { n: u32, cap: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
