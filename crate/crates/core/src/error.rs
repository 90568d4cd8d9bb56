use thiserror::Error;

/// Error type shared by the evaluators, the verifier, the bench harness,
/// and the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input lies outside an identity's validity domain: a denominator
    /// vanishes or a sum is empty. The verifier records these as skips,
    /// never as failures.
    #[error("{what}: input {n} is outside the validity domain ({requirement})")]
    DegenerateDomain {
        what: &'static str,
        n: u64,
        requirement: &'static str,
    },

    /// A division the identity claims is exact left a remainder. This is
    /// how a violated exact-mode identity manifests; the result is never
    /// silently truncated.
    #[error("{what}: inexact division {numerator}/{denominator}")]
    InexactDivision {
        what: &'static str,
        numerator: i128,
        denominator: i128,
    },

    /// A floating-point sum is too far from any integer to round safely.
    #[error("{what}: residual {residual:.6} for raw value {raw} exceeds the rounding guard")]
    ResidualGuard {
        what: &'static str,
        raw: f64,
        residual: f64,
    },

    /// A rational-mode identity failed to reduce to an integer.
    #[error("{what}: result {value} did not reduce to an integer")]
    NonIntegerResult { what: &'static str, value: String },

    /// A denominator evaluated to zero inside the declared domain.
    #[error("{what}: denominator is zero at n = {n}")]
    DivisionByZero { what: &'static str, n: u64 },

    /// Integer overflow was detected and refused; results never wrap.
    #[error("{what}: arithmetic overflow")]
    Overflow { what: &'static str },

    /// Input rejected before evaluation (zero where positive is required,
    /// or wider than the supported factoring range).
    #[error("{what}: unsupported input {value}")]
    UnsupportedInput { what: &'static str, value: u64 },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown benchmark target `{0}`")]
    UnknownTarget(String),

    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    #[error("function `{function}` has no method `{method}`")]
    UnknownMethod { function: String, method: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Process exit code the CLI maps this error to: 3 for tripped numeric
    /// guards, 2 for usage and domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResidualGuard { .. } | Error::Overflow { .. } => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
