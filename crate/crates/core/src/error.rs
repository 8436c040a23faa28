use thiserror::Error;

/// Errors raised by the library. Every variant renders as a single line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("division by the zero polynomial")]
    DivisorZero,
    #[error("relation part g must not involve Y, got {0}")]
    ContainsY(String),
    #[error("X^2*Y + g is not prime: X divides g, relation factors as {witness}")]
    NotPrime { witness: String },
    #[error("elements belong to different quotient rings")]
    RingMismatch,
    #[error("filtration reduction exceeded {cap} iterations")]
    IterationCapExceeded { cap: usize },
    #[error("leading form {0} is not of the shape X^2*Y + g")]
    NotApplicable(String),
    #[error("unknown map name `{0}` (expected phi1 or phi2)")]
    UnknownName(String),
    #[error("image of {generator} at U = 0 is {value}, expected {generator}")]
    NotIdentityAtZero { generator: String, value: String },
    #[error("map is not well defined: relation maps to {residue}")]
    NotWellDefined { residue: String },
    #[error("map is trivial: no generator has a nonzero higher component")]
    TrivialMap,
    #[error("induced graded map failed verification: {witness}")]
    VerificationFailed { witness: String },
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("invalid map file: {0}")]
    MapFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
