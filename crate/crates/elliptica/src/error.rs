//! Error types shared across the engine.

use thiserror::Error;

/// Engine-wide error type.
///
/// Pole and domain errors are recoverable during randomized verification
/// (the sampler rejects the assignment and redraws); the remaining
/// variants indicate misuse or exhaustion.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A denominator factor evaluated to an exact (non-structural) zero.
    #[error("pole: {0}")]
    Pole(String),

    /// An argument outside the kernel's domain (a = 0, |p| too large, ...).
    #[error("domain: {0}")]
    Domain(String),

    /// Unknown WP Bailey pair identifier.
    #[error("unknown pair id: {0}")]
    UnknownPair(String),

    /// A lemma was applied to a pair attached to the wrong matrix kind.
    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    /// Constraint solving divided by zero or was otherwise impossible.
    #[error("constraint: {0}")]
    Constraint(String),

    /// The rejection sampler gave up after the retry cap.
    #[error("sampling exhausted after {rejections} rejections (spec {spec})")]
    SamplingExhausted { spec: String, rejections: u32 },

    /// Report or config I/O failure.
    #[error("io: {0}")]
    Io(String),

    /// Bad CLI flags or configuration.
    #[error("usage: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
