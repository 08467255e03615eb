use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch")]
    RingMismatch,

    #[error("only integral elements can change ring")]
    NotIntegral,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("rank computation needs a field or the integers, got {0}")]
    NotAField(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("shape mismatch")]
    ShapeMismatch,

    #[error("invalid box set: {0}")]
    InvalidBoxSet(String),

    #[error("invalid relation label: {0}")]
    InvalidLabel(String),

    #[error("invalid place permutation: {0}")]
    InvalidPermutation(String),

    #[error("element not in Sym_λ")]
    NotInSymLower,

    #[error("label {label} is not canonical for space {space}")]
    NonCanonicalLabel { space: &'static str, label: String },

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    #[error("oracle path refused: {0}")]
    OracleRefused(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("straightening did not terminate within {0} steps")]
    StepCap(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
