use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A construction produced output that failed its own verification.
    /// The attached report localizes the failure.
    #[error("internal invariant broken in {context}: {} violation(s)", report.len())]
    InternalInvariantBroken {
        context: String,
        report: VerificationReport,
    },

    #[error("(R0, R1) is not a chain map: l1 R1 - R0 l1 is nonzero on g1 basis vector {0}")]
    NotChainMap(usize),

    #[error("structure is not strict: {0}")]
    NotStrict(String),

    #[error("morphisms are not composable: target of the first is {target}, source of the second is {next_source}")]
    NotComposable { target: String, next_source: String },

    #[error("target of the first homomorphism does not equal the source of the second")]
    SourceTargetMismatch,

    #[error("search budget exceeded: {candidates} candidates, budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },

    #[error("empty coefficient set")]
    EmptyCoefficients,

    #[error("bad mutation site: {0}")]
    BadSite(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("malformed document: {0}")]
    Schema(String),

    #[error("duplicate entry in tensor `{tensor}` at {indices:?}")]
    DuplicateEntry { tensor: String, indices: Vec<usize> },

    #[error("bad rational `{0}`")]
    BadRational(String),

    #[error("unknown structure kind `{0}`")]
    UnknownKind(String),

    #[error("unsupported format version {0}")]
    VersionMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::ShapeMismatch(msg.into())
    }

    pub(crate) fn broken(context: impl Into<String>, report: VerificationReport) -> Self {
        Error::InternalInvariantBroken {
            context: context.into(),
            report,
        }
    }
}
