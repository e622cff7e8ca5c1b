use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("arrow {0:?} is a loop")]
    LoopArrow(String),
    #[error("duplicate name {0:?}")]
    DuplicateName(String),
    #[error("arrow {arrow:?} has unknown endpoint {vertex:?}")]
    DanglingEndpoint { arrow: String, vertex: String },
    #[error("quiver is already a double quiver")]
    AlreadyDoubled,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("preprojective relation violated at vertices {vertices:?}")]
    RelationViolated { vertices: Vec<String> },
    #[error("subspace is not closed under the arrow maps")]
    NotSubmodule,
    #[error("representation is not nilpotent")]
    NotNilpotent,
    #[error("isomorphism search inconclusive (hom dimension {hom_dim})")]
    SearchExhausted { hom_dim: usize },
    #[error("quiver is not of finite type")]
    NotFiniteType,
    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<String>),
    #[error("words are not Bruhat comparable")]
    NotBruhatComparable,
    #[error("dimension vector {0:?} is not extremal for this step")]
    NotExtremalInput(Vec<i64>),
    #[error("extension produced dimensions {got:?}, expected {expected:?}")]
    DimensionMismatch { expected: Vec<i64>, got: Vec<i64> },
    #[error("truncation {requested} too small; retry with at least {suggested:?}")]
    TruncationTooSmall { requested: usize, suggested: Option<usize> },
    #[error("candidate cap exceeded: {candidates} candidates (cap {cap})")]
    CapExceeded { candidates: u128, cap: u128 },
    #[error("length cap {0} exceeded")]
    LengthCapExceeded(usize),
    #[error("count not polynomial at tested degree {degree}: counts {counts:?}")]
    InterpolationInconsistent { degree: usize, counts: Vec<(u64, u64)> },
    #[error("need at least {needed} primes, got {given}")]
    InsufficientPrimes { needed: usize, given: usize },
    #[error("prime {prime} divides a denominator of {value}")]
    BadPrime { prime: u64, value: String },
    #[error("automorphism does not diagonalize over the rationals")]
    NotDiagonalizable,
    #[error("grassmannian at {0:?} is not a finite point set")]
    NotFiniteRegime(Vec<usize>),
    #[error("no solution to a system that must be solvable: {0}")]
    NoSolution(String),
    #[error("solution not unique: homogeneous kernel of dimension {0}")]
    NonUnique(usize),
    #[error("internal assertion failed: {0}")]
    Internal(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            CapExceeded { .. }
            | LengthCapExceeded(_)
            | TruncationTooSmall { .. }
            | SearchExhausted { .. }
            | InterpolationInconsistent { .. }
            | NotFiniteRegime(_)
            | NotDiagonalizable => 3,
            NoSolution(_) | NonUnique(_) | Internal(_) | DimensionMismatch { .. } => 4,
            _ => 2,
        }
    }
}
