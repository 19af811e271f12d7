use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid supergroup: {0}")]
    InvalidKind(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("diagram has a tail, expected a tailless label: {0}")]
    NotTailless(String),
    #[error("operands belong to different supergroups")]
    KindMismatch,
    #[error("Weyl group has {size} elements, above the enumeration cap {cap}")]
    EnumerationCap { size: u128, cap: u128 },
    #[error("integer overflow")]
    Overflow,
    #[error("division by {0} is not exact")]
    InexactDivision(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Sign(String),
    #[error("vector is not sigma-symmetric")]
    NotSymmetric,
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
