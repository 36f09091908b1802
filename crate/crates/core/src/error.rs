use thiserror::Error;

/// Everything that can go wrong across the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a universe needs between 2 and {max} truth values, got {got}")]
    InvalidUniverse { got: usize, max: usize },

    #[error("universe mismatch: expected {expected} values, found {found}")]
    UniverseMismatch { expected: usize, found: usize },

    #[error("value index {index} is outside a {n}-valued universe")]
    ValueOutOfRange { index: usize, n: usize },

    #[error("unknown truth value name `{0}`")]
    UnknownValue(String),

    #[error("{0} is not a set of designated values (it must contain 1 and exclude 0)")]
    NotDesignated(String),

    #[error("a representation needs at least one mixed relation")]
    EmptyRepresentation,

    #[error("representation is not dominance-minimal")]
    NotMinimal,

    #[error("extension is not an intersection of mixed consequence relations")]
    NotIntersective,

    #[error("unknown regularity rule `{0}`")]
    UnknownRule(String),

    #[error("rule index {index} exceeds arity {arity}")]
    RuleIndexOutOfRange { index: usize, arity: usize },

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("{what} is limited to {limit} (requested {requested})")]
    TooLarge {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    #[error("table is not a G-conditional for the relation")]
    NotAConditional,

    #[error("missing witness: {0}")]
    MissingWitness(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("partial order is invalid: {0}")]
    InvalidOrder(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
