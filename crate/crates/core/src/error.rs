use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Which kind of line of a matrix a constraint refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is not in {{-1, 0, 1}}")]
    BadEntry { row: usize, col: usize, value: i64 },
    #[error("{line} {index} sums to {sum}, expected 1")]
    LineSum { line: Line, index: usize, sum: i64 },
    #[error("{line} {index}: nonzero entries do not alternate in sign starting and ending with +1")]
    Alternation { line: Line, index: usize },
    #[error("invalid height matrix: {0}")]
    HeightMatrix(String),
    #[error("invalid monotone triangle: {0}")]
    Triangle(String),
    #[error("{what} of order {requested} exceeds the configured bound {max}")]
    TooLarge { what: &'static str, requested: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid profile: {0}")]
    Profile(String),
    #[error("point outside the domain of {what}: {detail}")]
    Domain { what: &'static str, detail: String },
    #[error("quadrature did not converge: error estimate {estimate:e} above tolerance {tolerance:e}")]
    Quadrature { estimate: f64, tolerance: f64 },
    #[error("invalid tiling: {0}")]
    Tiling(String),
    #[error("invalid height function: {0}")]
    HeightFunction(String),
    #[error("ASMs of orders {n} and {m} are not a compatible pair")]
    Incompatible { n: usize, m: usize },
    #[error("invalid tableau: {0}")]
    Tableau(String),
    #[error("invalid jump sequence: {0}")]
    Jumps(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
