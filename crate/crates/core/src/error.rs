use thiserror::Error;

/// Errors raised by the library proper (file parsing has its own type in [`crate::io`]).
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("generators {0} and {1} do not commute")]
    NonCommuting(usize, usize),

    #[error("stabilizer generators are not independent")]
    DependentGenerators,

    #[error("generator {0} is the all-identity string")]
    AllIdentityGenerator(usize),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("distribution does not sum to 1 (sum = {0})")]
    NotADistribution(f64),

    #[error("symplectic vector has odd length {0}")]
    OddSymplecticLength(usize),

    #[error("all-identity string has no span")]
    EmptySpan,

    #[error("state space {level} has {size} vertices, not a power of two")]
    NonPowerOfTwoStateSpace { level: usize, size: usize },

    #[error("every path through the trellis has infinite weight")]
    NoFinitePath,

    #[error("the coset carries zero probability mass under this channel")]
    ZeroMassCoset,

    #[error("weight enumerator requires the all-zero syndrome trellis")]
    NonzeroSyndromeTrellis,

    #[error("problem size {actual} exceeds the guard {limit}")]
    SizeGuardExceeded { actual: usize, limit: usize },

    #[error("unrolled length {n} cannot fit one full block of width {width}")]
    WindowOverflow { n: usize, width: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
