use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A configured size limit was hit.
    #[error("resource cap `{cap}` exceeded: limit {limit}, reached {reached}")]
    Resource {
        cap: &'static str,
        limit: usize,
        reached: usize,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid order: {0}")]
    InvalidOrder(String),

    /// An error raised while handling the degree-`degree` piece of an ideal.
    #[error("at degree {degree}: {source}")]
    AtDegree {
        degree: u32,
        #[source]
        source: Box<Error>,
    },

    #[error("exponent overflow")]
    Overflow,
}

impl Error {
    pub(crate) fn resource(cap: &'static str, limit: usize, reached: usize) -> Self {
        Error::Resource {
            cap,
            limit,
            reached,
        }
    }

    pub fn is_resource(&self) -> bool {
        match self {
            Error::Resource { .. } => true,
            Error::AtDegree { source, .. } => source.is_resource(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
