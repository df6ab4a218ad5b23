use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq)]
pub enum Error {
    #[error("cannot shift empty strategy")]
    EmptyStrategy,

    #[error("strategy exhausted: needed {needed} terms, only {available} available")]
    StrategyExhausted { needed: usize, available: usize },

    #[error("cell index {cell} out of range for width {width}")]
    CellOutOfRange { cell: usize, width: usize },

    #[error("strategy term {term} out of range for width {width}")]
    TermOutOfRange { term: usize, width: usize },

    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },

    #[error("strategy prefix too short: construction needs {needed} terms, only {available} available")]
    PrefixTooShort { needed: usize, available: usize },

    #[error("epsilon must be positive, got {0}")]
    NonPositiveEpsilon(f64),

    #[error("radius {radius} outside (0, {limit})")]
    RadiusOutOfRange { radius: f64, limit: f64 },

    #[error("non-ASCII byte 0x{byte:02X} at position {position}")]
    NonAsciiByte { position: usize, byte: u8 },

    #[error("empty bit string")]
    EmptyBitString,

    #[error("bit string length {len} is not a positive multiple of {multiple}")]
    BlockLength { len: usize, multiple: usize },

    #[error("state width {width} is not divisible by 4")]
    WidthNotNibble { width: usize },

    #[error("empty value sequence")]
    EmptySequence,

    #[error("identical texts: avalanche trial needs two distinct messages")]
    IdenticalTexts,

    #[error("trials must be at least {min}, got {got}")]
    TooFewTrials { min: u64, got: u64 },

    #[error("truncation width {width} outside [8, 32]")]
    TruncationWidth { width: u32 },
}
