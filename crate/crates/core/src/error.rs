use thiserror::Error;

/// Errors raised by the solvers, estimators and instance I/O.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A caller broke a structural precondition (dimension mismatch, empty input).
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An instance or profile failed validation; `field` is a dotted path.
    #[error("validation error at `{field}`: {message}")]
    Validation { field: String, message: String },

    /// Instance file did not match the schema.
    #[error("schema error at `{path}` (line {line}, column {column}): {message}")]
    Schema {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("lot-type universe too large: {count} lot-types exceed the cap of {cap}")]
    TooLargeUniverse { count: u128, cap: u128 },

    /// Problem exceeds a work or memory guard of an exact method.
    #[error("instance too large for {method}: {detail}")]
    TooLarge { method: &'static str, detail: String },

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    /// No assignment satisfies the lot-type bound and the cardinality window.
    #[error("infeasible: no plan satisfies the lot-type limit and cardinality window")]
    Infeasible,

    /// The anytime heuristic visited subsets but every one was discarded.
    #[error("no feasible plan found by the heuristic")]
    NoFeasiblePlan,

    #[error("missing product `{0}` in sales history")]
    MissingProduct(String),

    #[error("estimation impossible: {0}")]
    EstimationImpossible(String),

    #[error("invalid baseline: exact objective must be positive, got {0}")]
    InvalidBaseline(f64),

    #[error("io error: {0}")]
    Io(String),

    #[error("csv error: {0}")]
    Csv(String),
}

impl Error {
    pub(crate) fn validation(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Validation {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(err: csv::Error) -> Self {
        Error::Csv(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
