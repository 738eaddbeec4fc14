use alloc::string::String;
use core::fmt;

use crate::model::Vertex;

/// Input and contract errors. Negative answers (an instance without a
/// representation) are not errors; solvers report them in their outcome types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    UnknownVertex(String),
    DuplicateVertex(String),
    DuplicateEdge(usize, usize),
    EdgeOutOfRange(usize, usize),
    /// An order is not a permutation of its vertex set.
    NotAPermutation(&'static str),
    /// Lengths must cover every vertex and be strictly positive.
    BadLength(Vertex),
    MissingVertex(Vertex),
    MissingOrder(&'static str),
    MissingLengths,
    UnexpectedLengths,
    NotATotalOrder,
    IsolatedVertexPresent(Vertex),
    LabelMismatch,
    TooLarge { size: usize, bound: usize },
    InvalidChoice(usize),
    InvalidInput(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(name) => write!(f, "unknown vertex `{name}`"),
            Error::DuplicateVertex(name) => write!(f, "vertex `{name}` declared twice"),
            Error::DuplicateEdge(a, b) => write!(f, "duplicate edge a#{a}-b#{b}"),
            Error::EdgeOutOfRange(a, b) => write!(f, "edge a#{a}-b#{b} references an undeclared vertex"),
            Error::NotAPermutation(what) => write!(f, "{what} is not a permutation of its vertex set"),
            Error::BadLength(v) => write!(f, "missing or non-positive length for {v}"),
            Error::MissingVertex(v) => write!(f, "representation has no stick for {v}"),
            Error::MissingOrder(what) => write!(f, "instance lacks the order {what}"),
            Error::MissingLengths => f.write_str("instance has no fixed lengths"),
            Error::UnexpectedLengths => f.write_str("variable-length solver given fixed lengths"),
            Error::NotATotalOrder => f.write_str("order is not a permutation of all vertices"),
            Error::IsolatedVertexPresent(v) => write!(f, "isolated vertex {v} present"),
            Error::LabelMismatch => f.write_str("permutation does not match the tree's leaf labels"),
            Error::TooLarge { size, bound } => write!(f, "size {size} exceeds bound {bound}"),
            Error::InvalidChoice(node) => write!(f, "invalid child order for node {node}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
