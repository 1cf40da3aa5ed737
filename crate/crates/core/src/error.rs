use thiserror::Error;

/// Failure modes shared by every stage of the engine.
///
/// The variants map one-to-one onto the process exit codes of the CLI and
/// the status codes of the C interface (see [`Error::code`]).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {kind}{rank}: {reason}")]
    UnsupportedType {
        kind: String,
        rank: usize,
        reason: String,
    },

    #[error("node {node} is not a simple root of {system} (valid nodes are 1..={rank})")]
    InvalidNode {
        system: String,
        node: usize,
        rank: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(
        "unipotent radical of {system} at node {node} is not abelian: root {witness} has level {level}"
    )]
    NonAbelian {
        system: String,
        node: usize,
        witness: String,
        level: i64,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("Weyl orbit exceeded the configured bound of {0} elements")]
    OrbitOverflow(usize),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Exit / status code: 2 invalid input, 3 non-abelian node, 4 internal
    /// consistency failure.
    pub fn code(&self) -> i32 {
        match self {
            Error::UnsupportedType { .. } | Error::InvalidNode { .. } | Error::InvalidInput(_) => 2,
            Error::NonAbelian { .. } => 3,
            Error::Precondition(_) | Error::OrbitOverflow(_) | Error::Consistency(_) => 4,
        }
    }
}
