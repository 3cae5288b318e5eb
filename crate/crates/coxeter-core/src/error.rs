use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemError {
    #[error("rank must be positive")]
    EmptyRank,
    #[error("rank {0} exceeds the supported maximum of 64")]
    RankTooLarge(usize),
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("diagonal entry m({i},{i}) must be 1", i = i + 1)]
    Diagonal { i: usize },
    #[error("matrix is not symmetric at ({i},{j})", i = i + 1, j = j + 1)]
    Asymmetric { i: usize, j: usize },
    #[error("off-diagonal label m({i},{j}) = {label} is below 2", i = i + 1, j = j + 1)]
    OffDiagonal { i: usize, j: usize, label: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("generator index {index} out of range for rank {rank}")]
    OutOfRange { index: usize, rank: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BallError {
    #[error("ball of radius {radius} exceeds the element cap {cap}")]
    CapExceeded { radius: usize, cap: usize },
}
