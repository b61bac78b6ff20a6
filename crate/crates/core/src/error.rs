//! Crate-wide error type.
//!
//! Everything that can go wrong is either a caller mistake (mismatched
//! rings, zero divisors-by, malformed input), a verification failure that
//! carries the failing verdicts as data, or a resource-budget abort.

use thiserror::Error;

use crate::predicates::PredicateVerdict;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    RingMismatch(String),

    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),

    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("invalid ring context: {0}")]
    InvalidRing(String),

    #[error("polynomial is not homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("operation undefined for the unit ideal")]
    UnitIdeal,

    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,

    #[error("reduction budget exhausted after {steps} steps")]
    ResourceExhausted { steps: u64 },

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("generators must share one degree, found degrees {0:?}")]
    MixedDegrees(Vec<u32>),

    #[error("center equals the ambient variety (codimension 0)")]
    CodimensionZero,

    #[error("center is contained in the declared singular locus of the ambient")]
    CenterInSingularLocus,

    #[error("center ideal does not contain the ambient ideal")]
    CenterNotInAmbient,

    #[error("genericity retries exhausted at stage `{stage}` after {attempts} attempts")]
    GenericityFailure {
        stage: String,
        attempts: u32,
        failed_verdicts: Vec<PredicateVerdict>,
    },

    #[error("transversality verification failed")]
    SncFailure { verdict: Box<PredicateVerdict> },

    #[error("subset verification failed for S = {subset:?}")]
    SpecialVerificationFailure {
        subset: Vec<usize>,
        failed_verdicts: Vec<PredicateVerdict>,
    },

    #[error("input is not a regular sequence")]
    NotRegularSequence { verdict: Box<PredicateVerdict> },

    #[error("codimension {r} exceeds the configured cap {max_r} (raise --max-r to override)")]
    CodimensionCap { r: usize, max_r: usize },

    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("certificate format error: {0}")]
    Certificate(String),

    #[error("unsupported certificate version `{0}`")]
    CertificateVersion(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code for the command-line surface: 1 verification failure,
    /// 2 usage/input error, 3 resource exhaustion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceExhausted { .. } => 3,
            Error::GenericityFailure { .. }
            | Error::SncFailure { .. }
            | Error::SpecialVerificationFailure { .. }
            | Error::NotRegularSequence { .. } => 1,
            _ => 2,
        }
    }
}
