use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] fraggen_core::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Format(String),
    #[error("checkpoint was trained against a different vocabulary")]
    VocabMismatch,
    #[error("checkpoint is corrupt or truncated")]
    ChecksumError,
    #[error("cannot launch engine `{0}`")]
    EngineUnavailable(String),
    #[error("adapter: {kind}: {message}")]
    Adapter { kind: String, message: String },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
