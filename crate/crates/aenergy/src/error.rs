use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
#[non_exhaustive]
pub enum Error {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("edge list declares {declared} edges but contains {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("bad graph spec `{0}` (expected family:params, g6:<text> or file:<path>)")]
    GraphSpec(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{table} row {row}, column {column}: expected {expected}, got {actual}")]
    ReproductionFailure {
        table: &'static str,
        row: String,
        column: &'static str,
        expected: String,
        actual: String,
    },
    #[error(transparent)]
    Core(#[from] aenergy_core::Error),
}
