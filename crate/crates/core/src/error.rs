use thiserror::Error;

/// Maximum number of vertices a materialized [`crate::Graph`] may hold.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("capacity exceeded: {what} needs {needed} vertices, limit is {limit}")]
    Capacity {
        what: String,
        needed: u64,
        limit: u64,
    },

    #[error("{0} is closed-form-only and cannot be materialized as a graph")]
    ClosedFormOnly(String),

    #[error("parameter out of range: {0}")]
    Range(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("negative coefficient at index {0}")]
    NegativeCoefficient(usize),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("constant term must be 1, found {0}")]
    ConstantTermNotOne(String),

    #[error("invalid stable-set profile: {0}")]
    InvalidProfile(String),

    #[error("memo table exceeded {limit} entries")]
    ResourceExhausted { limit: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable code for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::Capacity { .. } | Error::ClosedFormOnly(_) | Error::ResourceExhausted { .. } => {
                "capacity"
            }
            Error::Range(_)
            | Error::InvalidVertex { .. }
            | Error::SelfLoop(_)
            | Error::UnknownIdentity(_) => "range",
            Error::NegativeCoefficient(_)
            | Error::ZeroPolynomial
            | Error::ConstantTermNotOne(_)
            | Error::InvalidProfile(_) => "domain",
            Error::Io(_) => "io",
        }
    }

    /// Process exit code used by the CLI.
    pub fn exit_code(&self) -> i32 {
        match self.code() {
            "parse" => 2,
            "capacity" => 3,
            _ => 1,
        }
    }

    pub(crate) fn capacity(what: impl Into<String>, needed: u64) -> Self {
        Error::Capacity {
            what: what.into(),
            needed,
            limit: MAX_VERTICES as u64,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
