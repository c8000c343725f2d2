use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("invalid convolution word: {0}")]
    InvalidWord(String),

    #[error("language is empty")]
    EmptyLanguage,

    #[error("language has at least two members")]
    AmbiguousLanguage,

    #[error("invalid encoding: {0}")]
    InvalidEncoding(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("structure check failed for {relation}: {detail}")]
    StructureCheck { relation: String, detail: String },

    #[error("invalid letter {0:?}")]
    InvalidLetter(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
