use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("simplex has repeated vertex {0}")]
    DegenerateSimplex(u32),
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(u32, u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("simplex {0} is not in the complex")]
    UnknownSimplex(String),
    #[error("simplex {0} has no lower-adjacent neighbors")]
    IsolatedSimplex(String),
    #[error("no lower adjacency among {0}-simplices (m_n = 0)")]
    NoAdjacency(usize),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
