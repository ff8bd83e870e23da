use alloc::string::String;
use core::fmt;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed input: out-of-range ids, wrong sizes, dependent sets and so on.
    InvalidInput(String),
    /// A tree model whose subtree for `vertex` is empty or disconnected.
    InvalidModel { vertex: u32 },
    /// The host tree is not a tree.
    InvalidHost(String),
    NotChordal,
    /// A reduction parameter outside its supported range.
    Parameter(String),
    /// A source instance violating the promise of its reduction.
    Precondition(String),
    /// The state space exceeded the configured budget.
    Budget { limit: u64, attempted: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::InvalidModel { vertex } => {
                write!(f, "invalid model: subtree of vertex {vertex} is empty or disconnected")
            }
            Error::InvalidHost(msg) => write!(f, "invalid host tree: {msg}"),
            Error::NotChordal => write!(f, "graph is not chordal"),
            Error::Parameter(msg) => write!(f, "parameter error: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::Budget { limit, attempted } => {
                write!(f, "state budget of {limit} exceeded (attempted {attempted})")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
