use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed group-spec or word text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Family parameter outside its admissible range.
    #[error("range error: {0}")]
    Range(String),

    /// Operation requires one of the four infinite families.
    #[error("unsupported diagram: {0}")]
    Unsupported(String),

    /// Diagram is not (recognizably) of finite type at the supported scale.
    #[error("not finite type: {0}")]
    NotFiniteType(String),

    /// A configured workload cap was exceeded.
    #[error("cap exceeded: {what} needs {needed}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    /// A word letter lies outside the ambient rank.
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },

    /// Two values built over different ambient diagrams were combined.
    #[error("mismatched ambient diagrams: {0}")]
    ContextMismatch(String),

    /// Internal consistency failure; indicates a bug upstream.
    #[error("internal error: {0}")]
    Internal(String),
}
