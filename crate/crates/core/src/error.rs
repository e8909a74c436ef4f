use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis vectors are not linearly independent")]
    NotIndependent,
    #[error("lattice is not contained in the given superlattice")]
    NotSublattice,
    #[error("lattices have unequal rank ({sub} vs {sup})")]
    UnequalRank { sub: usize, sup: usize },
    #[error("integer overflow while converting to machine width")]
    Overflow,

    #[error("first row of the matrix must be all ones (column {column} has {value})")]
    NonHomogeneous { column: usize, value: i64 },
    #[error("columns span a space of dimension {rank} < {d}")]
    RankDeficient { rank: usize, d: usize },
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("face {0:?} is not a face of the cone")]
    FaceNotOfA(Vec<usize>),
    #[error("incidence signs violate d² = 0 on the chain {lower:?} < {upper:?}")]
    OrientationInconsistent { lower: Vec<usize>, upper: Vec<usize> },

    #[error("family of faces is not closed under going up")]
    NotUpwardClosed,
    #[error("conv(A) is not a simplex")]
    NotSimplex,
    #[error("margin {margin} leaves an empty inner box")]
    BoxTooSmall { margin: i64 },
    #[error("malformed box: {0}")]
    BadBox(String),
    #[error("operation requires d = 2, got d = {0}")]
    UnsupportedDimension(usize),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
