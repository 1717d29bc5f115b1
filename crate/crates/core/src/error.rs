use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cap mismatch: {left} vs {right}")]
    CapMismatch { left: usize, right: usize },

    #[error("cap shortfall in {what}: need {needed}, have {have}")]
    CapShortfall {
        what: String,
        needed: usize,
        have: usize,
    },

    #[error("degree {degree:?} lies outside the truncation of {what}")]
    DegreeOutOfRange {
        what: String,
        degree: (usize, usize),
    },

    #[error("not a directed two-object simplicial set: {0}")]
    NotDirected(String),

    #[error("search budget of {budget} nodes exceeded in {what}")]
    BudgetExceeded { what: String, budget: u64 },

    #[error("simplicial identity violated: {0}")]
    Identity(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
