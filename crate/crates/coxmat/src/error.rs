use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] coxmat_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("config: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 0 success, 1 verification failure, 2 usage or configuration,
    /// 3 suspected infinite type, 4 bad interval.
    pub fn exit_code(&self) -> i32 {
        use coxmat_core::Error as E;
        match self {
            CliError::Core(E::InfiniteTypeSuspected { .. } | E::GroupTooLarge { .. }) => 3,
            CliError::Core(E::NotComparable | E::ParabolicMismatch) => 4,
            CliError::Core(
                E::DegenerateDiagram(_)
                | E::UnknownPreset(_)
                | E::InvalidElement(_)
                | E::InvalidTolerance
                | E::AllGeneratorsFixed
                | E::DimensionMismatch { .. },
            ) => 2,
            CliError::Core(_) => 1,
            CliError::Usage(_) | CliError::Config(_) | CliError::Io { .. } | CliError::Json(_) => 2,
            CliError::VerificationFailed(_) => 1,
        }
    }
}
