use thiserror::Error;

use crate::closure::{AlignmentViolation, AntiExchangeWitness};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("points {0:?} and {1:?} have identical coordinates")]
    DuplicatePoint(String, String),
    #[error("points {0:?}, {1:?}, {2:?} are collinear")]
    NotGeneralPosition(String, String, String),
    #[error("points {0:?} and {1:?} share an x-coordinate")]
    VerticalPair(String, String),
    #[error("point set needs at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),
    #[error("invalid composition tree: {0}")]
    InvalidTree(String),
    #[error("ground set is empty")]
    EmptyGround,
    #[error("alignment violated: {0}")]
    Alignment(AlignmentViolation),
    #[error("anti-exchange violated: {0}")]
    AntiExchange(AntiExchangeWitness),
    #[error("closure operator is inconsistent: {0}")]
    InconsistentClosure(String),
    #[error("internal law violated: {0}")]
    Inconsistency(String),
    #[error(
        "cycle enumeration was capped; exact dimension unavailable (bounds {lower}..={upper})"
    )]
    IncompleteHypergraph { lower: usize, upper: usize },
    #[error("brute-force oracle cap exceeded: {0}")]
    OracleCap(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
