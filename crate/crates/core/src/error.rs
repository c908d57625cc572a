use thiserror::Error;

/// Errors produced by the library and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a Harder-Narasimhan type needs at least one block")]
    EmptyType,

    #[error("block {index} has rank 0; block ranks must be positive")]
    ZeroRank { index: usize },

    #[error("block slopes must strictly decrease, but block {index} has slope {upper} and block {} has slope {lower}", .index + 1)]
    SlopeOrderViolation {
        index: usize,
        upper: String,
        lower: String,
    },

    #[error("{what} = {value} is outside the admissible range {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("e_{s} = {e_s} exceeds its upper bound {bound}")]
    InvalidESValue { s: usize, e_s: String, bound: String },

    #[error("expected {expected} values of e_s (one per s in 1..r-1), got {got}")]
    ESLength { expected: usize, got: usize },

    #[error("the sandwich threshold is undefined for s = {s}: s lies in the first block (s <= r_1)")]
    UndefinedThreshold { s: usize },

    #[error("isolation is classified only for strongly semistable types, this one has {blocks} blocks")]
    NotStronglySemistable { blocks: usize },

    #[error("enumeration of {cells} cells exceeds the budget of {budget}")]
    BudgetExceeded { cells: usize, budget: usize },

    #[error("value {value} does not fit the chosen scalar type")]
    Overflow { value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("internal cross-check failed: {0}")]
    CrossCheck(String),
}

impl Error {
    /// Process exit status for the command-line tool: 2 for usage and parse
    /// errors, 1 for validation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::InvalidArgument(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
