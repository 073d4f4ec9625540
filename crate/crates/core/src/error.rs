//! Crate error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A configuration file or key is unusable; the message names the key.
    #[error("configuration error: {0}")]
    Config(String),

    /// Sampling was requested from an empty replay buffer.
    #[error("cannot sample from an empty buffer")]
    CannotSample,

    /// A closed-form expression was evaluated outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
