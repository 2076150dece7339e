use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid size {0}")]
    InvalidSize(usize),

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group axiom violated: {0}")]
    GroupAxiom(String),

    #[error("quandle axiom {axiom} fails at {witness}")]
    QuandleAxiom { axiom: u8, witness: String },

    #[error("Alexander quandle is not finite: {0}")]
    NotFinite(String),

    #[error("subset is not closed: {0}")]
    NotClosed(String),

    #[error("dynamical cocycle condition {condition} fails at {witness}")]
    DynamicalCondition { condition: u8, witness: String },

    #[error("parse error at token {index}: {message}")]
    Parse { index: usize, message: String },

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("coloring search space too large: {candidates} candidates exceed cap {cap}")]
    TooLarge { candidates: u128, cap: u128 },

    #[error("unsupported modulus {0}: {1}")]
    UnsupportedModulus(u64, String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid module action: {0}")]
    InvalidAction(String),

    #[error("cocycle condition fails: {0}")]
    CocycleCondition(String),

    #[error("construction error: {0}")]
    Construction(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
