use alloc::string::String;

use crate::graph::VertexId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} is not a vertex of the {family} graph")]
    InvalidVertex { vertex: VertexId, family: &'static str },
    #[error("{0}")]
    Domain(String),
    #[error("truncation has more than {limit} vertices")]
    TruncationTooLarge { limit: usize },
    #[error("constructed certificate was rejected by the verifier ({count} violations)")]
    CertificateRejected { count: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
