use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("collection is empty")]
    EmptyCollection,
    #[error("members have unequal cardinalities ({first} and {other})")]
    NotRelevant { first: usize, other: usize },
    #[error("sets may not contain element id 0")]
    ZeroElement,
    #[error("element {0} occurs twice in one set")]
    DuplicateElement(u32),
    #[error("collections may not contain the empty set")]
    EmptyMember,
    #[error("set {0:?} occurs twice in the collection")]
    DuplicateMember(Vec<u32>),
    #[error("set {0:?} is not a member of the collection")]
    NotAMember(Vec<u32>),
    #[error("operation needs at least {needed} members, collection has {actual}")]
    CollectionTooSmall { needed: usize, actual: usize },
    #[error("the three sets are not pairwise distinct")]
    NotDistinct,
    #[error("bipartition is malformed: {0}")]
    BadBipartition(&'static str),
    #[error("single-removal e-values differ: {values:?}")]
    HypothesisFails { values: Vec<usize> },
    #[error("precondition fails: {0}")]
    PreconditionFails(String),
    #[error("{what} is {actual}, limit is {limit}")]
    TooLarge {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: u32, n: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("edge ({0}, {1}) listed twice")]
    ParallelEdge(u32, u32),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
    #[error("invalid trial configuration: {0}")]
    BadConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("theorem violated: {0}")]
    Violation(String),
}

impl Error {
    pub(crate) fn too_large(what: &'static str, actual: usize, limit: usize) -> Self {
        Error::TooLarge {
            what,
            actual,
            limit,
        }
    }

    /// Stable machine-readable code, used in reports and across the C ABI.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyCollection => "EmptyCollection",
            Error::NotRelevant { .. } => "NotRelevant",
            Error::ZeroElement => "ZeroElement",
            Error::DuplicateElement(_) => "DuplicateElement",
            Error::EmptyMember => "EmptyMember",
            Error::DuplicateMember(_) => "DuplicateMember",
            Error::NotAMember(_) => "NotAMember",
            Error::CollectionTooSmall { .. } => "CollectionTooSmall",
            Error::NotDistinct => "NotDistinct",
            Error::BadBipartition(_) => "BadBipartition",
            Error::HypothesisFails { .. } => "HypothesisFails",
            Error::PreconditionFails(_) => "PreconditionFails",
            Error::TooLarge { .. } => "TooLarge",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::NoVertices => "NoVertices",
            Error::SelfLoop(_) => "SelfLoop",
            Error::ParallelEdge(..) => "ParallelEdge",
            Error::EmptySet => "EmptySet",
            Error::UnknownTheorem(_) => "UnknownTheorem",
            Error::BadConfig(_) => "BadConfig",
            Error::Parse(_) => "ParseError",
            Error::Violation(_) => "Violation",
        }
    }
}
