use thiserror::Error;

/// Errors shared across the crate.
///
/// `Input` covers malformed user data (bad terms, arity mismatches,
/// undeclared cells), `Capacity` covers requests that exceed the
/// configured desk-scale budgets, and `Presentation` covers cellular
/// presentations whose declared identities contradict each other.
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("capacity error: {0}")]
    Capacity(String),
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("unsupported theory: {0}")]
    UnsupportedTheory(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    /// Process exit code for the CLI: 2 for input-shaped errors, 3 for
    /// capacity/budget errors. Exit 1 is reserved for property refutations,
    /// which are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity(_) => 3,
            _ => 2,
        }
    }
}
