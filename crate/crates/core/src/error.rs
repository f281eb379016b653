use thiserror::Error;

/// Errors produced by graph construction, solvers and the CLI layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range for graph of order {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("instance of order {n} exceeds the {solver} size cap of {cap}")]
    SizeCap {
        solver: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("{op} requires a connected graph")]
    Disconnected { op: &'static str },
    #[error("inapplicable: {0}")]
    Inapplicable(String),
    #[error("malformed witness: {0}")]
    MalformedWitness(String),
    #[error("construction bug: {0}")]
    ConstructionBug(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code for the CLI layer: parse errors 2, size caps 3,
    /// precondition violations 4, anything else 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Io(_) | Error::Json(_) => 2,
            Error::SizeCap { .. } => 3,
            Error::Disconnected { .. }
            | Error::Inapplicable(_)
            | Error::SelfLoop(_)
            | Error::VertexOutOfRange { .. }
            | Error::InvalidFamily(_)
            | Error::MalformedWitness(_) => 4,
            Error::ConstructionBug(_) => 1,
        }
    }
}
