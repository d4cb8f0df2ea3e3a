use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("the zero polynomial is not a form")]
    ZeroForm,
    #[error("degree {degree} is too small (need at least {min})")]
    DegreeTooSmall { degree: u32, min: u32 },
    #[error("index k = {k} outside 1..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("limit subspace lost dimension: expected {expected}, got {got}")]
    DimensionDrop { expected: usize, got: usize },
    #[error("points {0} and {1} coincide projectively")]
    DuplicatePoint(usize, usize),
    #[error("point {0} is zero")]
    ZeroPoint(usize),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("the functional is degenerate on the algebra")]
    WitnessDegenerate,
    #[error("tensor is not normalized: entry ({0},{1}) of the unit contraction")]
    NotNormalized(usize, usize),
    #[error("multiplication-matrix identities failed: {0}")]
    IdentityFailure(String),
    #[error("the relation does not annihilate the powers of the points")]
    RelationNotSatisfied,
    #[error("relation coefficient {0} is zero")]
    ZeroLambda(usize),
    #[error("points {0} and {1} are proportional")]
    RepeatedPoint(usize, usize),
    #[error("points {0} and {1} collide for generic t")]
    PointCollision(usize, usize),
    #[error("certificate rejected: {0}")]
    CertificateInvalid(String),
    #[error("bad index: {0}")]
    BadIndex(String),
    #[error("bad q: {0}")]
    BadQ(String),
    #[error("bad pair (a, b) = ({a}, {b}) for k = {k}")]
    BadPair { a: usize, b: usize, k: usize },
    #[error("unknown example name `{0}`")]
    UnknownName(String),
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("ideal is not zero-dimensional in the affine sense")]
    NotArtinian,
}

pub type Result<T> = std::result::Result<T, Error>;
