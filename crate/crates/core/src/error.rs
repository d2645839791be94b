use thiserror::Error;

use crate::hypercube::CubeEdge;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension {0} is outside the supported range 1..={max}", max = crate::hypercube::MAX_DIM)]
    InvalidDimension(usize),

    #[error("direction {dir} is not in 1..={n}")]
    InvalidDirection { dir: usize, n: usize },

    #[error("vertex {bits} does not belong to Q_{n}")]
    InvalidVertex { bits: u32, n: usize },

    #[error("edge index {index} is out of range for Q_{n}")]
    InvalidEdgeIndex { index: usize, n: usize },

    #[error("{edge} is not an edge of Q_{n}")]
    InvalidEdge { edge: CubeEdge, n: usize },

    #[error("cannot reflect {edge} across its own direction {dir}")]
    ReflectionAlongOwnDirection { edge: CubeEdge, dir: usize },

    #[error("expected {expected} edges, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },

    #[error("edge set contains a cycle: {}", fmt_edges(.cycle))]
    Cycle { cycle: Vec<CubeEdge> },

    #[error("edge set has {components} connected components")]
    Disconnected { components: usize },

    #[error("{edge} is not an edge of the tree")]
    EdgeNotInTree { edge: CubeEdge },

    #[error("{edge} is not slidable in direction {dir}: {reason}")]
    NotSlidable {
        edge: CubeEdge,
        dir: usize,
        reason: Box<Error>,
    },

    #[error("{edge} is not slidable in direction {dir}: its reflection is already in the tree")]
    ReflectionInTree { edge: CubeEdge, dir: usize },

    #[error("{edge} is not an edge in direction {dir}")]
    NotInDirection { edge: CubeEdge, dir: usize },

    #[error("slide of {edge} in direction {dir} reverses {count} edges in that direction, expected exactly one")]
    NoUniqueReversal {
        edge: CubeEdge,
        dir: usize,
        count: usize,
    },

    #[error("simultaneous slide {epsilon:?} in direction {dir} is not a tree; cycle: {}", fmt_edges(.cycle))]
    DependentSlides {
        dir: usize,
        epsilon: Vec<u8>,
        cycle: Vec<CubeEdge>,
    },

    #[error("no slidable edge found on the path between {first} and {second}")]
    NoSlidableOnPath { first: CubeEdge, second: CubeEdge },

    #[error("operation requires n = {required}, got n = {actual}")]
    UnsupportedDimension { required: usize, actual: usize },

    #[error("enumeration of Q_{0} is out of desk scale")]
    EnumerationRefused(usize),

    #[error("operation on Q_{n} requires n <= {max}")]
    TooLarge { n: usize, max: usize },

    #[error("tree is not upright")]
    NotUpright,

    #[error("component {id} is not a 4-cube: {reason}")]
    NotCubeComponent { id: u64, reason: String },

    #[error("search examined {examined} candidates without finding a witness")]
    SearchExhausted { examined: u64 },

    #[error("invalid section: {0}")]
    InvalidSection(String),

    #[error("inconsistent signed section: {0}")]
    InconsistentSignedSection(String),

    #[error("invalid payload: {0}")]
    InvalidPayload(String),

    #[error("component of size {0} is not a candidate for cube certification")]
    NotCubeCandidate(usize),
}

fn fmt_edges(edges: &[CubeEdge]) -> String {
    edges
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
