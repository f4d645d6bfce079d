use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field too small: p = {p} must exceed {needed}")]
    FieldTooSmall { p: u64, needed: usize },
    #[error("decomposition stuck: endomorphism top has dimension {top_dim} but no splitting element was found")]
    DecompositionStuck { top_dim: usize },
    #[error("representation does not satisfy relation {0}")]
    RelationViolated(usize),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("quiver is not representation-finite (root search exceeded coordinate bound {0})")]
    NotRepresentationFinite(usize),
    #[error("invalid picket P^{m}_{l} in S({n})")]
    InvalidPicket { n: usize, m: usize, l: usize },
    #[error("enumeration unstable: {lower} indecomposables at bound {bound}, {upper} at bound {next}")]
    EnumerationUnstable {
        bound: usize,
        next: usize,
        lower: usize,
        upper: usize,
    },
    #[error("tau undefined: {0} is projective")]
    TauUndefined(String),
    #[error("no tau candidate for {0}")]
    TauNotFound(String),
    #[error("several tau candidates for {0}: {1:?}")]
    TauAmbiguous(String, Vec<String>),
    #[error("hammock computations disagree at {label}: rank route {rank}, defect route {defect}")]
    InternalMismatch {
        label: String,
        rank: usize,
        defect: i64,
    },
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("multiplicity of {label} is not integral ({numerator}/{denominator})")]
    NonIntegralMultiplicity {
        label: String,
        numerator: i64,
        denominator: usize,
    },
    #[error("not a complex: second map composed with first is nonzero")]
    NotAComplex,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("bad path: {0}")]
    BadPath(String),
    #[error("bad algebra element: {0}")]
    BadElement(String),
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
