use thiserror::Error;

#[derive(Debug, Error)]
pub enum HgError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
    #[error("degenerate start: objective is zero at the initial weighting")]
    DegenerateStart,
    #[error("campaign refused: budget is {budget} solver invocations but {required} are required")]
    BudgetExceeded { budget: u64, required: u64 },
    #[error("malformed hypergraph record: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, HgError>;
