use alloc::string::String;

/// Errors reported by the library.
///
/// Invariant violations inside the library are bugs and panic instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// A configured size bound would be exceeded.
    #[error("resource bound exceeded: {what} = {value} exceeds the limit {limit}")]
    Resource {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    /// Fails with [`Error::Resource`] when `value > limit`.
    pub fn check_bound(what: &'static str, value: usize, limit: usize) -> Result<()> {
        if value > limit {
            Err(Error::Resource { what, value, limit })
        } else {
            Ok(())
        }
    }
}
