// SPDX-License-Identifier: Apache-2.0

use crate::hypergraph::{EdgeId, VertexId};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: EdgeId },
    #[error("edge {edge} lists vertex {vertex} twice")]
    DuplicateVertex { edge: EdgeId, vertex: VertexId },
    #[error("edge index {edge} out of range for {m} edges")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("edge {edge} has {size} vertices, at least {min} required")]
    EdgeTooSmall { edge: EdgeId, size: usize, min: usize },
    #[error("threshold {threshold} invalid for edge {edge} of size {size}")]
    InvalidThreshold { edge: EdgeId, threshold: usize, size: usize },
    #[error("threshold map has {found} entries, expected {expected}")]
    ThresholdCount { expected: usize, found: usize },
    #[error("hyperpath endpoints must be distinct")]
    SameEndpoints,
    #[error("at least two vertices required, got {n}")]
    TooFewVertices { n: usize },
    #[error("infeasible parameters: {0}")]
    InfeasibleParameters(&'static str),
    #[error("vertex set is not a core")]
    NotACore,
    #[error("no core of size n-m possible")]
    NoCoreOfSizeNM,
    #[error("no core found with at most {a_max} deleted edges")]
    NotFoundWithin { a_max: usize },
    #[error("edge order is not a permutation of the edge indices")]
    MalformedPermutation,
    #[error("filtration violates condition {condition}")]
    InvalidFiltration { condition: u8, position: Option<usize> },
    #[error("edge {edge} lies entirely inside the foundation")]
    FoundationCoversEdge { edge: EdgeId },
    #[error("no transfer index exists for filtration position {position}")]
    UndefinedTransferIndex { position: usize },
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(&'static str),
    #[error("core size must be at least 1")]
    InvalidCoreSize,
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("invalid instance: {0}")]
    InvalidInstance(&'static str),
    #[error("clause {clause} is malformed")]
    MalformedClause { clause: usize },
    #[error("certificate was produced by a different reduction")]
    WrongCertificate,
    #[error("parameter k must be at least 4, got {k}")]
    RadiusParameter { k: usize },
}
