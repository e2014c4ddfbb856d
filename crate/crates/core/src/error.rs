use crate::decomposition::PureDecomposition;
use crate::diagram::BettiDiagram;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("codimension mismatch: {0} vs {1}")]
    CodimMismatch(usize, usize),

    #[error("homological degree {i} outside 0..={codim}")]
    HomologicalDegreeOutOfRange { i: usize, codim: usize },

    #[error("homological degree {0} has no non-zero entry")]
    MissingColumn(usize),

    #[error("row zero sums to zero, cannot normalize")]
    ZeroRowZero,

    #[error("S-polynomial is not divisible by (1-t)^{0}")]
    NonDivisible(usize),

    #[error("cancellation at ({k},{l}) would leave a negative entry")]
    NegativeEntry { k: usize, l: i64 },

    #[error("degree sequence {0:?} is not strictly increasing")]
    NotIncreasing(Vec<i64>),

    #[error("degree sequence must have at least one entry")]
    EmptySequence,

    #[error("sequence lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("low bound {low:?} is not below high bound {high:?}")]
    BoundsNotOrdered { low: Vec<i64>, high: Vec<i64> },

    #[error("poset has {0} elements, more than the supported maximum")]
    PosetTooLarge(u128),

    #[error("diagram violates equations {violated:?}")]
    InvalidInput { violated: Vec<usize> },

    #[error("diagram is not a non-negative combination along a chain")]
    NotInCone {
        partial: Box<PureDecomposition>,
        remainder: Box<BettiDiagram>,
    },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("shift sequence {0:?} is not strictly increasing")]
    ShiftsNotIncreasing(Vec<i64>),

    #[error("column {0} is not concentrated in a single degree")]
    ColumnNotConcentrated(usize),

    #[error("column index {k} is invalid for codimension {codim}")]
    ColumnOutOfRange { k: usize, codim: usize },

    #[error("entries on the wrong side of pivot degree {pivot}")]
    PivotNotSeparating { pivot: i64 },

    #[error("diagram has an entry at pivot degree {0}")]
    DegreeCollision(i64),

    #[error("{d:?} is not dominated by {d_prime:?} in every position")]
    NotDominated { d: Vec<i64>, d_prime: Vec<i64> },

    #[error("degree list must be non-empty with positive entries")]
    InvalidDegrees,

    #[error("J is not contained in I: generator {0:?} is not divisible")]
    NotContained((u64, u64)),

    #[error("invalid Gorenstein data: {0}")]
    InvalidSocle(String),

    #[error("index {index} out of range for a chain of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("face is not a maximal chain of the poset")]
    NotMaximalChain,

    #[error("diagram is not in the span of the chain")]
    NotInSpan { residual: Box<BettiDiagram> },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
