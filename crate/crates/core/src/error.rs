use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("order {order} exceeds capacity {max}")]
    Capacity { order: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("malformed graph6: {0}")]
    Graph6Malformed(String),

    #[error("truncated graph6: expected {expected} data bytes, found {found}")]
    Graph6Truncated { expected: usize, found: usize },

    #[error("graph6 character {ch:?} at byte {pos} is outside 63..=126")]
    Graph6BadChar { ch: char, pos: usize },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition is not equitable")]
    NotEquitable,

    #[error("empty interval: lower end exceeds upper end")]
    InvalidInterval,

    #[error("family expression: {0}")]
    FamilyParse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
