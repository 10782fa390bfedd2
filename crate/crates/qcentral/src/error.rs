//! Error types shared across the pipeline.

use thiserror::Error;

/// Everything that can go wrong between parsing a command line and emitting
/// a generator file. Variants carry enough context to be reported as
/// machine-readable JSON by the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero in Q(q)")]
    DivisionByZero,

    #[error("denominator vanishes at the sample point q0 = {q0}")]
    PoleAtSample { q0: String },

    #[error("unsupported Cartan type: {0}")]
    UnsupportedType(String),

    #[error("pairing matrix is not diagonal at weight {weight}: entry ({row},{col}) = {value}")]
    NonDiagonalPairing {
        weight: String,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("change-of-basis matrix is singular at weight {weight}")]
    SingularB { weight: String },

    #[error("monomial selection exhausted all words of weight {weight} at rank {rank}")]
    SelectionFailed { weight: String, rank: usize },

    #[error("braid image left the negative half (convention mismatch): {0}")]
    ConventionMismatch(String),

    #[error("required weight block {weight} is missing from the cutoff set")]
    CutoffIncomplete { weight: String },

    #[error("element is not central: [H, {generator}] has entry ({row},{col}) = {value}")]
    NotCentral {
        generator: String,
        row: usize,
        col: usize,
        value: String,
    },

    #[error("extremal product vector is not an eigenvector of H (row {row} residue {value})")]
    NoGroundState { row: usize, value: String },

    #[error("kernel vector vanishes on every non-extremal state")]
    ZeroSupport,

    #[error("retained state {from} has positive rate {rate} into discarded state {to}")]
    DiscardLeakage { from: String, to: String, rate: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the CLI. 0 = success, 2 = verification
    /// failure, 3 = unsupported input, 4 = internal assertion.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotCentral { .. } | Error::DiscardLeakage { .. } => 2,
            Error::UnsupportedType(_)
            | Error::Parse(_)
            | Error::Io(_)
            | Error::Json(_)
            | Error::PoleAtSample { .. }
            | Error::DivisionByZero
            | Error::Invalid(_) => 3,
            Error::NonDiagonalPairing { .. }
            | Error::SingularB { .. }
            | Error::SelectionFailed { .. }
            | Error::ConventionMismatch(_)
            | Error::CutoffIncomplete { .. }
            | Error::NoGroundState { .. }
            | Error::ZeroSupport
            | Error::DimensionMismatch(_) => 4,
        }
    }
}
