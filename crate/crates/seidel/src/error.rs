//! Error types shared across the crate.

use std::fmt;

/// Errors produced by library operations.
///
/// The CLI maps these onto exit codes: domain errors ([`Error::Parameter`],
/// [`Error::Precondition`], [`Error::UnsupportedSpectrum`]) exit 1, parse and
/// I/O errors exit 2, resource and budget errors exit 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the operation's domain (bad order for a named
    /// family, out-of-range vertex, empty part, ...).
    Parameter(String),
    /// A mathematical precondition of the operation does not hold for the
    /// given input (non-switchable spectrum, identity violation, ...).
    Precondition(String),
    /// The parameter set has irrational eigenvalues (conference type), which
    /// the spectrum machinery rejects.
    UnsupportedSpectrum(String),
    /// Malformed textual input (graph6 line, config file, ...).
    Parse(String),
    /// A configured cap or budget was exceeded.
    Resource(String),
    /// Underlying I/O failure, carrying the offending path or stream name.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parameter(m) => write!(f, "parameter error: {m}"),
            Error::Precondition(m) => write!(f, "precondition error: {m}"),
            Error::UnsupportedSpectrum(m) => write!(f, "unsupported spectrum: {m}"),
            Error::Parse(m) => write!(f, "parse error: {m}"),
            Error::Resource(m) => write!(f, "resource error: {m}"),
            Error::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
