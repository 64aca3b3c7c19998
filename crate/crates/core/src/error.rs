use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("degree {degree} is outside the series range 1..={max_degree}")]
    MissingDegree { degree: u32, max_degree: u32 },

    #[error("series lengths differ: {left} vs {right}")]
    SeriesMismatch { left: u32, right: u32 },

    #[error("classes live in different rings")]
    RingMismatch,

    #[error("insertion must be a multiple of H^{expected}, got {found}")]
    InsertionDegree { expected: u32, found: String },

    #[error("not a Calabi-Yau hypersurface: degree {hyp_degree} in P^{ambient_dim}")]
    NotCalabiYau { ambient_dim: u32, hyp_degree: u32 },

    #[error("weight triple is degenerate for degree {degree}")]
    DegenerateWeights { degree: u32 },

    #[error("recursion re-entered {0} before it finished")]
    Cycle(String),

    #[error("memo conflict at {0}: two different values written")]
    MemoConflict(String),

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("line {line}: cannot parse rational {text:?}")]
    Parse { line: usize, text: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
