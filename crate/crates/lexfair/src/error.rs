use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// The input instance violates a structural invariant.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    /// An agent name or index does not exist in the instance.
    #[error("unknown agent: {0}")]
    UnknownAgent(String),

    /// An item label or index does not exist in the instance.
    #[error("unknown item: {0}")]
    UnknownItem(String),

    /// Score vectors of different lengths cannot be compared.
    #[error("score vector length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// The operation is only defined for the other polarity.
    #[error("operation requires a {expected} instance")]
    WrongPolarity { expected: &'static str },

    /// The operation is defined only for goods (e.g. potential envy).
    #[error("unsupported operation: {0}")]
    Unsupported(String),

    /// A precondition on an allocation was violated.
    #[error("allocation contract violated: {0}")]
    ContractViolation(String),

    /// Exhaustive enumeration would exceed the configured budget.
    #[error("enumeration budget exceeded: {required} allocations > budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// An internal consistency check failed; this indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    /// Malformed JSON input.
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
