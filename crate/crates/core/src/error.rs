use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} does not fit the word-sized field arithmetic (need p < 2^32)")]
    ModulusTooLarge(u64),

    #[error("polynomial is identically zero")]
    IdenticallyZero,

    #[error("invalid family parameters: {0}")]
    InvalidParams(String),

    #[error("socle degree e = {e} <= d = {d}: use predict_generic")]
    UseGenericPrediction { d: i64, e: i64 },

    #[error("not a point-scheme table: {0}")]
    NotPointSchemeTable(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("not linkable by this Gorenstein h-vector (negative entry in degree {degree})")]
    NotLinkable { degree: usize },

    #[error("d must be even for links of type 2 (got d = {0})")]
    OddDegree(i64),

    #[error("link precondition failed: {0}")]
    LinkPrecondition(String),

    #[error("invalid Gorenstein data: {0}")]
    InvalidGorenstein(String),

    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    #[error(
        "surface rejected after {attempts} sampling attempts ({found} of {wanted} points found)"
    )]
    SurfaceRejected {
        attempts: usize,
        found: usize,
        wanted: usize,
    },

    #[error("increase window: Hilbert function has not stabilised by degree {0}")]
    WindowTooSmall(usize),

    #[error("projective dimension exceeds 3: beta_(4,{0}) is nonzero")]
    ProjectiveDimension(usize),

    #[error("invalid point set: {0}")]
    InvalidPointSet(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
