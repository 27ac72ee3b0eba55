use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{what} must be at least {min}, got {got}")]
    Domain {
        what: &'static str,
        min: u64,
        got: u64,
    },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("refusing to enumerate trees with {n} tips: limit is {limit}")]
    GuardExceeded { n: usize, limit: usize },
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),
}

impl Error {
    pub(crate) fn domain(what: &'static str, min: u64, got: u64) -> Self {
        Error::Domain { what, min, got }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    TrailingInput,
    /// A node with fewer than two children, `()` or `(x)`.
    TooFewChildren(usize),
}

/// Error produced while reading tree text. `position` is a byte offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub struct ParseError {
    pub position: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "unexpected character {c:?} at offset {}", self.position)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "unexpected end of input at offset {}", self.position)
            }
            ParseErrorKind::TrailingInput => {
                write!(f, "trailing input at offset {}", self.position)
            }
            ParseErrorKind::TooFewChildren(found) => write!(
                f,
                "node opened at offset {} has {found} child(ren), at least 2 required",
                self.position
            ),
        }
    }
}
