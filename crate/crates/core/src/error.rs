use thiserror::Error;

/// Errors raised by matroid constructions and the operations built on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {size} elements, exceeding the cap of {cap}")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("label `{0}` contains the reserved marker `^`")]
    ReservedLabel(String),
    #[error("empty label")]
    EmptyLabel,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("subset is not contained in the ground set")]
    NotASubset,
    #[error("basis family is empty")]
    EmptyFamily,
    #[error("bases have unequal cardinalities ({expected} and {found})")]
    UnequalCardinalities { expected: usize, found: usize },
    #[error("exchange axiom fails: removing {element} from {first:?} admits no replacement from {second:?}")]
    ExchangeAxiomViolation {
        first: Vec<String>,
        second: Vec<String>,
        element: String,
    },
    #[error("rank {k} out of range for a ground set of size {size}")]
    RankOutOfRange { k: usize, size: usize },
    #[error("duplicate edge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("hyperplane support is empty")]
    EmptySupport,
    #[error("ground sets overlap in label `{0}`")]
    GroundSetsOverlap(String),
    #[error("relabeling is not a bijection: {0}")]
    NotABijection(String),
    #[error("operands live on different ground sets")]
    GroundSetMismatch,
    #[error("truncation flat is empty")]
    EmptyFlat,
    #[error("truncation flat has rank zero")]
    RankZeroFlat,
    #[error("set system member {0} is empty")]
    EmptyMember(usize),
    #[error("label `{0}` is used on both sides of the bipartite graph")]
    LabelCollision(String),
    #[error("matroid has loops")]
    LoopyMatroid,
    #[error("matroid has loops; Chow constructions need a loopless matroid")]
    LoopyInput,
    #[error("monomial degree {degree} exceeds rank {rank} minus one")]
    DegreeTooLarge { degree: usize, rank: usize },
    #[error(
        "system has {members} members but the matroid has rank {rank}; expected rank minus one"
    )]
    RankMismatch { members: usize, rank: usize },
    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),
    #[error("invalid ray: {0}")]
    InvalidRay(String),
    #[error("search over a ground set of {size} elements exceeds the limit of {limit}; force to override")]
    SearchTooLarge { size: usize, limit: usize },
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
