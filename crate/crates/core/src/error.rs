use thiserror::Error;

/// Errors raised by the engine. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inadmissible rank {rank} for type {family}: {reason}")]
    InadmissibleRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },
    #[error("unknown Lie type family '{0}' (expected one of A B C D E F G)")]
    UnknownFamily(String),
    #[error("rank mismatch: expected {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("vector {0:?} is not a root of this system")]
    NotARoot(Vec<i64>),
    #[error("node index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("brute-force Weyl group oracle is limited to rank <= 3 (got rank {0})")]
    RankTooLargeForOracle(usize),
    #[error("parabolic subset contains every simple root; G/G is a point")]
    DegenerateParabolic,
    #[error("weight is not a character of P: coordinate {index} lies in S_P but is {value}")]
    NotAPCharacter { index: usize, value: i64 },
    #[error("beta is only defined on S \\ S_P; node {0} belongs to S_P")]
    NodeInParabolic(usize),
    #[error("word {0:?} is not a minimal coset representative for this parabolic")]
    NotMinimalRep(Vec<usize>),
    #[error("codimension {codim} out of range {min}..={max}")]
    CodimOutOfRange { codim: i64, min: i64, max: i64 },
    #[error("divisor and curve classes have different bases ({divisor} vs {curve} pullback coordinates)")]
    BasisMismatch { divisor: usize, curve: usize },
    #[error("node {node} is not cominuscule in {type_name}")]
    NotCominuscule { node: usize, type_name: String },
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("integer overflow in exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
