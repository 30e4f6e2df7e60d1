use thiserror::Error;

use crate::digraph::Vertex;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({tail}, {head}) references a vertex outside 0..{order}")]
    UnknownArcEndpoint { tail: Vertex, head: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(Vertex, Vertex),
    #[error("coloring has {found} entries, digraph has {expected} vertices")]
    ColorCount { expected: usize, found: usize },
    #[error("vertex {vertex} is not in the digraph (order {order})")]
    InvalidSet { vertex: Vertex, order: usize },
    #[error("digraph has {order} vertices, over the oracle limit of {limit}")]
    OracleLimit { order: usize, limit: usize },
    #[error("not a {family}: {reason}")]
    Shape { family: &'static str, reason: String },
    #[error("family has {found} members, base digraph has {expected} vertices")]
    FamilySize { expected: usize, found: usize },
    #[error("invalid attachment: {0}")]
    Attachment(String),
    #[error("size error: {0}")]
    Size(String),
    #[error("theorem condition held but the witness {witness:?} is not an up-color kernel ({decider})")]
    Inconsistency { decider: &'static str, witness: Vec<Vertex> },
}

impl Error {
    pub(crate) fn shape(family: &'static str, reason: impl Into<String>) -> Self {
        Error::Shape { family, reason: reason.into() }
    }
}
