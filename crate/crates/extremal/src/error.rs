use thiserror::Error;

/// Failures reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    CharacteristicTwoUnsupported,
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("prime field GF({0}) is not compiled in; supported characteristics are {1}")]
    UnsupportedCharacteristic(u64, String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    JacobiViolation(usize, usize, usize),
    #[error("antisymmetry fails on basis pair ({0}, {1})")]
    AntisymmetryViolation(usize, usize),
    #[error("structure table has the wrong shape: {0}")]
    Shape(String),
    #[error("the zero element is not allowed here")]
    ZeroElement,
    #[error("the supplied elements do not span the algebra")]
    NotSpanning,
    #[error("element {0} is not extremal")]
    NotExtremal(usize),
    #[error("extremal form is not well defined: {0}")]
    WellDefinednessFailure(String),
    #[error("precondition not met: {0}")]
    PreconditionNotMet(String),
    #[error("witness {0} is not a sandwich")]
    NotASandwich(usize),
    #[error("the given subspaces do not form an ideal direct sum decomposition")]
    NotADirectSum,
    #[error("invalid rank {1} for type {0}")]
    InvalidRank(char, usize),
    #[error("unsupported type {0}")]
    UnsupportedType(String),
    #[error("central parameter must be zero before scaling")]
    CentralNotZero,
    #[error("bracket of {0} and {1} is not reducible by the identity set")]
    RewriteIncomplete(String, String),
    #[error("no zero component reached below degree {0}")]
    DegreeCapExceeded(usize),
    #[error(
        "exponential of a nilpotent element needs division by {0}, which vanishes in the field"
    )]
    ExpNotDefined(u64),
    #[error("element is not ad-nilpotent")]
    NotNilpotent,
    #[error("{0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
