use thiserror::Error;

use crate::table::OperatorKind;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set has {n} elements, the hard cap is {max}")]
    GroundTooLarge { n: usize, max: usize },

    #[error("duplicate element label `{0}` in ground set")]
    DuplicateLabel(String),

    #[error("unknown element label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate element `{0}` in set literal")]
    DuplicateElement(String),

    #[error("duplicate map entry for subset {0}")]
    DuplicateEntry(String),

    #[error("map is missing {missing} subsets and no default rule was declared")]
    IncompleteMap { missing: usize },

    #[error("operator table must have exactly {expected} images, got {got}")]
    WrongImageCount { expected: usize, got: usize },

    #[error("expected a {expected} table, got a {actual} table")]
    WrongKind {
        expected: OperatorKind,
        actual: OperatorKind,
    },

    #[error("table is neither a violator space nor a convex space; the check is undefined here")]
    PreconditionNotMet,

    #[error("interval lower bound {lower} is not contained in upper bound {upper}")]
    BadInterval { lower: String, upper: String },

    #[error("intervals overlap at subset {0}")]
    PartitionOverlap(String),

    #[error("no interval covers subset {0}")]
    PartitionGap(String),

    #[error("ground set of size {n} is too large for exhaustive enumeration (cap {max})")]
    TooLargeForEnumeration { n: usize, max: usize },

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("unknown fixture id `{0}`")]
    UnknownFixture(String),

    #[error("unknown axiom id `{0}`")]
    UnknownAxiom(String),

    #[error("point dimension must be 1 or 2, got {0}")]
    BadDimension(usize),

    #[error("point `{label}` has {got} coordinates, expected {expected}")]
    WrongCoordCount {
        label: String,
        got: usize,
        expected: usize,
    },

    #[error("point configuration must have between 1 and {max} points, got {n}")]
    BadPointCount { n: usize, max: usize },

    #[error("cannot parse `{0}` as a rational number")]
    BadRational(String),

    #[error("malformed file: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
