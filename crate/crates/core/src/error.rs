use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: field `{field}`: {message}")]
    Parse {
        line: usize,
        field: &'static str,
        message: String,
    },
    #[error("invalid automaton: {0}")]
    InvalidAutomaton(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("turn word has length {word} but the target set has length {target}")]
    LengthMismatch { word: usize, target: usize },
    #[error("exploration exceeded the cap of {cap} game states")]
    CapExceeded { cap: usize },
    #[error("automaton has {states} states, the game pipeline supports at most {max}")]
    TooManyStates { states: usize, max: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
