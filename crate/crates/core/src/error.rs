use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("group is not transitive")]
    NotTransitive,

    #[error("not a subgroup: generator {0} is not a member of the parent group")]
    NotSubgroup(usize),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{what} exceeds cap: {actual} > {bound}")]
    CapExceeded {
        what: &'static str,
        bound: usize,
        actual: String,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("order mismatch: expected {expected}, computed {actual}")]
    OrderMismatch { expected: String, actual: String },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: line {line}, column {column}: {message}")]
    Format {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn cap(what: &'static str, bound: usize, actual: impl ToString) -> Self {
        Error::CapExceeded {
            what,
            bound,
            actual: actual.to_string(),
        }
    }
}
