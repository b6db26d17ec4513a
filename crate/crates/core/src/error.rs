use thiserror::Error;

use crate::graph::{EdgeListError, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },
    #[error("edge ({u}, {v}) appears more than once")]
    DuplicateEdge { u: usize, v: usize },
    #[error("graph has {n} vertices, canonical forms are limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A real-valued argument outside the domain of an index formula.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum DomainError {
    #[error("degree pair ({a}, {b}) must have both entries at least 1")]
    NonPositiveDegree { a: usize, b: usize },
    #[error("vertex quantity Q[{vertex}] = {value} must be positive and finite")]
    NonPositiveQuantity { vertex: usize, value: f64 },
    #[error("expected {expected} vertex quantities, got {got}")]
    QuantityCount { expected: usize, got: usize },
    #[error("{0}")]
    Parameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{family}: {reason}")]
pub struct FamilyError {
    pub family: String,
    pub reason: String,
}

impl FamilyError {
    pub fn new(family: impl Into<String>, reason: impl Into<String>) -> Self {
        FamilyError { family: family.into(), reason: reason.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("{theorem}: precondition not met: {reason}")]
    Precondition { theorem: String, reason: String },
    #[error("indeterminate sign at n = {n} (max precision {precision} bits)")]
    IndeterminateCrossover { n: usize, precision: u32 },
    #[error(transparent)]
    Domain(#[from] DomainError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {n} is outside the built-in range {lo}..={hi}; {hint}")]
    OrderOutOfRange { n: usize, lo: usize, hi: usize, hint: &'static str },
}

/// Crate-wide error for callers that mix several modules.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error(transparent)]
    Search(#[from] SearchError),
}
