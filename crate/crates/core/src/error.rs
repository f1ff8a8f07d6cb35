use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid conductor n = {0}: n must be odd and at least 3")]
    InvalidConductor(i64),
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid label `{0}`: {1}")]
    LabelParse(String, String),
    #[error("label {0} is not simple: U(i,i,m,m-2i) splits as V(+1,i,m) + V(-1,i,m)")]
    NonSimpleLabel(String),
    #[error("invalid degree cutoff {0}: must be at least 2")]
    InvalidCutoff(usize),
    #[error("memory bound exceeded: {what} needs about {needed_mb} MB but the limit is {limit_mb} MB (set KN_MEMORY_MB to raise it)")]
    MemoryExceeded { what: String, needed_mb: u64, limit_mb: u64 },
    #[error("dimension bound exceeded: {0}")]
    DimensionBound(String),
    #[error("braided set is degenerate")]
    Degenerate,
    #[error("not a braided set: {0}")]
    NotBraidedSet(String),
    #[error("not a rack: {0}")]
    NotRack(String),
    #[error("cocycle condition violated at {0}")]
    CocycleViolated(String),
    #[error("invariance hypothesis fails at {0}")]
    InvarianceFails(String),
    #[error("decomposition does not balance: simples account for dimension {found}, module has dimension {expected}")]
    Unbalanced { found: usize, expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
