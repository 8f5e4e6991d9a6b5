use crate::family::EdgeFamilyId;

/// Errors surfaced by the library API.
///
/// `BudgetExceeded` is the only resource-class error; everything else is an
/// argument-class error (bad input to an operation).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid coordinates: {0}")]
    InvalidCoords(String),

    #[error("vertex index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },

    #[error("mismatched parameters: expected (n={expected_n}, k={expected_k}), got (n={got_n}, k={got_k})")]
    MismatchedParams {
        expected_n: u32,
        expected_k: usize,
        got_n: u32,
        got_k: usize,
    },

    #[error("edge endpoints must be distinct vertices")]
    IdenticalVertices,

    #[error("invalid edge family {family} for k={k}")]
    InvalidFamily { family: EdgeFamilyId, k: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("structurally invalid partition: {0}")]
    InvalidPartition(String),

    #[error("vertex budget exceeded: K_{{n^(2k-1)}} needs {needed} vertices, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
