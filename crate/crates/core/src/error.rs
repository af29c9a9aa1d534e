use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<u32>),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("group too large: closure exceeds {limit} elements")]
    GroupTooLarge { limit: usize },

    #[error("subgroup enumeration refused: group order {order} exceeds cap {cap}")]
    SubgroupEnumerationRefused { order: usize, cap: usize },

    #[error("inconsistent action: two words for group element {element} induce different permutations")]
    InconsistentAction { element: usize },

    #[error("expected {expected} generator images, found {found}")]
    GeneratorCountMismatch { expected: usize, found: usize },

    #[error("invalid action table: {0}")]
    InvalidAction(String),

    #[error("point {point} out of range (n_points = {n_points})")]
    PointOutOfRange { point: usize, n_points: usize },

    #[error("element {element} out of range (group order = {order})")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("stabilizer condition violated: G_{x} is not contained in G_{y}")]
    StabilizerConditionViolated { x: usize, y: usize },

    #[error("stabilizer mismatch: G_{x} != G_{y}")]
    StabilizerMismatch { x: usize, y: usize },

    #[error("points {x} and {y} lie in the same orbit")]
    SameOrbit { x: usize, y: usize },

    #[error("cap exceeded: more than {cap} maps")]
    CapExceeded { cap: u64 },

    #[error("map is not G-equivariant")]
    NotEquivariant,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
