use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point {0} occurs more than once in the cycle list")]
    RepeatedPoint(usize),
    #[error("point {point} is out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("generators act on different numbers of points ({0} and {1})")]
    DegreeMismatch(usize, usize),
    #[error("group order exceeds the configured bound of {0}")]
    OrderBoundExceeded(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("class count {count} exceeds the limit {limit}")]
    TooManyClasses { count: usize, limit: usize },
    #[error("{value} is not coprime to the conductor {conductor}")]
    NotCoprime { value: i64, conductor: u32 },
    #[error("no Dixon prime found below the search bound")]
    PrimeSearchExhausted,
    #[error("eigenspace splitting failed: {0}")]
    EigensplitFailure(String),
    #[error("orthogonality self-check failed: {0}")]
    OrthogonalityFailure(String),
    #[error("codegree of row {0} is not an integer")]
    NonIntegralCodegree(usize),
    #[error("partition size {partition} differs from cycle type size {cycle_type}")]
    SizeMismatch { partition: usize, cycle_type: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("unknown group name `{0}`")]
    UnknownName(String),
    #[error("construction of `{name}` does not match its recorded properties: {detail}")]
    ConstructionMismatch { name: String, detail: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}
