use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these onto its stable exit codes: parse/contract/domain
/// failures are input errors (exit 2), size caps are capability errors
/// (exit 3), and theorem violations or failed internal certifications are
/// falsification signals (exit 10).
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 or colouring input, with the offending byte offset
    /// where one is known.
    #[error("parse error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },

    /// A documented precondition of an operation was violated.
    #[error("contract violation: {0}")]
    Contract(String),

    /// Input is outside the operation's mathematical domain (for example an
    /// exceptional graph that must be routed to the exact oracle).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input exceeds a documented size cap.
    #[error("capability exceeded: {0}")]
    Capability(String),

    /// A sweep found a graph violating a stated bound or equality
    /// characterization. This is the falsification signal.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    /// An internally certified result failed certification. Indicates an
    /// implementation bug and is surfaced loudly.
    #[error("internal error: {0}")]
    Internal(String),

    /// A cooperative cancellation token was triggered mid-search.
    #[error("search cancelled")]
    Cancelled,

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
