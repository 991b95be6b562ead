use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {left} vs {right}")]
    OrderMismatch { left: u32, right: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} out of range 1..={size}")]
    IndexOutOfRange { index: i64, size: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("expected a {expected} generator table, got {found}")]
    WrongPresentation {
        expected: &'static str,
        found: &'static str,
    },

    #[error("level {level} out of range for table of depth {depth}")]
    LevelOutOfRange { level: usize, depth: usize },

    #[error("generator ({i},{j}) is excluded; (1,1) would be the identity")]
    ExcludedGenerator { i: usize, j: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("calibration failed: {0}")]
    Calibration(String),

    #[error("seed vector is zero")]
    ZeroSeed,

    #[error("invalid convention: {0}")]
    InvalidConvention(String),

    #[error("cannot parse {0:?} as a rational number")]
    ParseRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
