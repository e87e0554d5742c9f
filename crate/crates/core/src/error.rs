use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("involution violation at tet {tet} face {face}: {message}")]
    Involution {
        tet: usize,
        face: u8,
        message: String,
    },

    #[error("unglued face: tet {tet} face {face}")]
    Unglued { tet: usize, face: u8 },

    #[error("non-orientable: gluing at tet {tet} face {face} preserves orientation")]
    NonOrientable { tet: usize, face: u8 },

    #[error("invalid edge at tet {tet} local edge {edge}: identified with itself reversed")]
    InvalidEdge { tet: usize, edge: u8 },

    #[error("taut-marking violation: {0}")]
    TautMarking(String),

    #[error("triangulation is not taut")]
    NotTaut,

    #[error("triangulation carries no coorientations")]
    MissingCoorientations,

    #[error("triangulation is not veering: {0}")]
    NotVeering(String),

    #[error("triangulation is disconnected")]
    Disconnected,

    #[error("invalid Pachner site: {0}")]
    InvalidSite(String),

    #[error("node budget of {budget} exceeded")]
    ResourceCap { budget: usize },

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("simplex not in surface: {0}")]
    NoSuchSimplex(String),

    #[error("automorphism aligns edge product disks along the cycle {0:?}")]
    Aligning(Vec<(usize, usize)>),

    #[error("regluing sequence exceeded its bound at face {face}")]
    GuardExceeded { face: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("invalid signature: {0}")]
    Signature(String),

    #[error("reconstruction failed: {0}")]
    Reconstruction(String),
}
