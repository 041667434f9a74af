use thiserror::Error;

use crate::graph::Vertex;
use crate::oracle::Conflict;

pub type Result<T, E = SednError> = std::result::Result<T, E>;

/// Process exit codes shared by the CLI and the C ABI.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INVALID_LABELING: i32 = 1;
    pub const CONFLICT: i32 = 2;
    pub const UNCOVERED_OR_REFUSED: i32 = 3;
    pub const INTERNAL_MISMATCH: i32 = 4;
    pub const IO_PARSE: i32 = 5;
}

#[derive(Debug, Error)]
pub enum SednError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("malformed labeling: {0}")]
    MalformedLabeling(String),

    #[error("labeling too large: {edges} edges exceeds the cap of {cap}")]
    TooLarge { edges: u128, cap: u128 },

    #[error("labeling is not a signed edge dominating function ({violations} violated edges)")]
    NotSedf { violations: usize },

    #[error("vertices {a} and {b} lie in different parts")]
    DifferentParts { a: Vertex, b: Vertex },

    #[error("{0}")]
    Conflict(Box<Conflict>),

    #[error("no formula covers K({m},{n},{p}): {reason}")]
    Uncovered {
        m: u32,
        n: u32,
        p: u32,
        reason: String,
    },

    #[error("no known construction for K({m},{n},{p}) ({reason})")]
    NoConstruction {
        m: u32,
        n: u32,
        p: u32,
        reason: String,
    },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("certificate mismatch: {0}")]
    CertificateMismatch(String),

    #[error("refused: {0}")]
    Refused(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl SednError {
    pub fn exit_code(&self) -> i32 {
        match self {
            SednError::NotSedf { .. } => exit::INVALID_LABELING,
            SednError::Conflict(_) => exit::CONFLICT,
            SednError::Uncovered { .. }
            | SednError::NoConstruction { .. }
            | SednError::Refused(_)
            | SednError::TooLarge { .. } => exit::UNCOVERED_OR_REFUSED,
            SednError::Construction(_) | SednError::CertificateMismatch(_) => {
                exit::INTERNAL_MISMATCH
            }
            SednError::InvalidParams(_)
            | SednError::InvalidEdge(_)
            | SednError::InvalidVertex(_)
            | SednError::MalformedLabeling(_)
            | SednError::DifferentParts { .. }
            | SednError::Parse(_)
            | SednError::Io(_) => exit::IO_PARSE,
        }
    }
}

impl From<serde_json::Error> for SednError {
    fn from(e: serde_json::Error) -> Self {
        SednError::Parse(e.to_string())
    }
}
