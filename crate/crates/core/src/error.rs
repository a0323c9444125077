use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("relation {relation} has a term of length {length} < 2; the ideal is not admissible")]
    Admissibility { relation: String, length: usize },

    #[error("path {path} of length {length} is not in the ideal; the Loewy bound L = {loewy} is too small or the ideal is not admissible")]
    LoewyBound {
        path: String,
        length: usize,
        loewy: usize,
    },

    #[error("top is not squarefree: vertex {vertex} occurs more than once")]
    TopNotSquarefree { vertex: String },

    #[error("subspace is not a submodule: {0}")]
    NotSubmodule(String),

    #[error("module does not have the expected top: {0}")]
    TopMismatch(String),

    #[error("point is not on the chart: polynomial {polynomial} evaluates to {value}")]
    NotOnChart { polynomial: String, value: String },

    #[error("submodule has codimension {found}, expected {expected}")]
    Rank { expected: usize, found: usize },

    #[error("skeleton mismatch: {0}")]
    SkeletonMismatch(String),

    #[error("oracle budget exceeded: {what} needs {needed} steps, budget is {budget}")]
    OracleScale {
        what: String,
        needed: u128,
        budget: u128,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("semantic error at line {line}: {message}")]
    Semantic { line: usize, message: String },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
