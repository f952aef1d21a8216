use thiserror::Error;

/// Everything that can go wrong while building bases, presentations and
/// the structures derived from them. Failed *laws* are not errors; law
/// checkers report counterexamples as data.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a base needs at least one element")]
    EmptyBase,

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("invalid element name `{0}`")]
    InvalidName(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("operands belong to different bases")]
    BaseMismatch,

    #[error("{what} is limited to {limit} elements, got {actual}")]
    SizeCap {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("{what} needs at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("operation table has no entry for ({left}, {right})")]
    MissingTableEntry { left: String, right: String },

    #[error("duplicate operation table entry for ({left}, {right})")]
    DuplicateTableEntry { left: String, right: String },

    #[error("preorder is not transitive: {a} <= {b} and {b} <= {c}, but not {a} <= {c}")]
    NotTransitive { a: String, b: String, c: String },

    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: String, b: String, c: String },

    #[error("`{unit}` is not a two-sided unit: fails at `{elem}`")]
    BadUnit { unit: String, elem: String },

    #[error("unsupported operation: {0}")]
    WrongOperationKind(&'static str),

    #[error("mode `{0}` requires an operation")]
    MissingOperation(&'static str),

    #[error("this construction requires a unit subset")]
    MissingUnit,

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
