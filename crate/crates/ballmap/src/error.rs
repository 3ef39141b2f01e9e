//! Crate-wide error type.
//!
//! Construction code returns structured errors; "no result exists" cases
//! that are legitimate answers (e.g. no bridge between two polytopes) are
//! expressed as `Option`/report values instead, so an `Err` always means
//! the request itself could not be carried out.

use thiserror::Error;

/// Errors produced by construction and verification routines.
#[derive(Debug, Error)]
pub enum BallmapError {
    /// An input's dimension does not match what the operation requires.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// Geometric input is degenerate (affinely dependent vertices, empty
    /// polytope, zero-area triangle, …).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A polytope that must be bounded is not.
    #[error("polytope is unbounded")]
    Unbounded,

    /// An operation that needs a nonempty collection received an empty one.
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    /// A brick parameter is outside its documented range.
    #[error("parameter out of range: {0}")]
    ParamRange(String),

    /// A map fails the even/odd structure required for revolution.
    #[error("parity violation: {0}")]
    ParityViolation(String),

    /// The approximation search hit the per-component degree cap.
    #[error("degree cap {cap} reached before meeting tolerance (context: {context})")]
    DegreeCap { cap: usize, context: String },

    /// The path search exhausted its retry budget.
    #[error("retry budget exhausted after {attempts} attempts: {context}")]
    RetryExhausted { attempts: usize, context: String },

    /// A union of regions is not connected by analytic paths, so no single
    /// ball image can equal it.
    #[error("target is not connected by analytic paths: {0}")]
    NotConnected(String),

    /// A construction precondition failed validation.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// Malformed JSON artifact.
    #[error("JSON error in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    /// Malformed numeric literal inside a JSON artifact.
    #[error("cannot parse {0:?} as an exact rational (expected \"p\" or \"p/q\")")]
    BadRational(String),

    /// Filesystem failure while reading or writing an artifact.
    #[error("I/O error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, BallmapError>;
