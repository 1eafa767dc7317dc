use thiserror::Error;

/// Errors raised by construction, algebra, and verification.
#[derive(Debug, Error)]
pub enum Error {
    #[error("component {component} = {value} is outside [0, 1]{}", context_suffix(.context))]
    ComponentOutOfRange {
        component: &'static str,
        value: f64,
        context: Option<String>,
    },

    #[error("t + i + f = {sum} exceeds 3{}", context_suffix(.context))]
    SumExceedsBound { sum: f64, context: Option<String> },

    #[error("membership sequence must be non-empty")]
    EmptySequence,

    #[error("truth sequence not non-decreasing at slot {slot}{}", context_suffix(.context))]
    TruthOrderViolation { slot: usize, context: Option<String> },

    #[error("dimension mismatch: expected {expected}, got {actual}{}", context_suffix(.context))]
    DimensionMismatch {
        expected: usize,
        actual: usize,
        context: Option<String>,
    },

    #[error("cannot align dimension {current} down to {requested}")]
    AlignBelowDimension { current: usize, requested: usize },

    #[error("duplicate element '{element}'")]
    DuplicateElement { element: String },

    #[error("universe mismatch between operands")]
    UniverseMismatch,

    #[error("pair ({x}, {y}) is outside the relation's universes")]
    PairOutsideUniverse { x: String, y: String },

    #[error("relation is not square (source and target universes differ)")]
    NotSquare,

    #[error("composition requires matching inner universes")]
    CompositionMismatch,

    #[error("relation power k = 0 is undefined")]
    ZeroPower,

    #[error("transitive closure failed to reach a fixpoint within {iterations} iterations")]
    ClosureDiverged { iterations: usize },

    #[error("relation value at ({x}, {y}) is not contained in the cartesian product of its context sets")]
    ContainmentViolation { x: String, y: String },

    #[error("unknown law '{0}'")]
    UnknownLaw(String),

    #[error("unknown claim '{0}'")]
    UnknownClaim(String),

    #[error("exhaustive enumeration of {required} cases exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),

    #[error("document schema violation: {0}")]
    Schema(String),
}

fn context_suffix(context: &Option<String>) -> String {
    match context {
        Some(c) => format!(" (at {c})"),
        None => String::new(),
    }
}

pub type Result<T> = std::result::Result<T, Error>;
