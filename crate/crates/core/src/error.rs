use thiserror::Error;

use crate::fillings::PsiMove;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("entry {0} is zero")]
    ZeroEntry(usize),
    #[error("magnitudes are not a permutation of 1..={0}")]
    RankViolation(usize),
    #[error("index {index} is outside [-{rank}, {rank}] \\ {{0}}")]
    IndexOutOfRange { index: i32, rank: usize },
    #[error("inconsistent diagram: {0}")]
    InconsistentDiagram(String),
    #[error("a pair pattern needs two distinct arcs")]
    SameArc,
    #[error("{0} is not a closer")]
    NotACloser(String),
    #[error("vertex {0} cannot be merged with its primed companion")]
    UnmergeablePair(i32),
    #[error("rerouting lost track of available openers at {0}")]
    Desynchronized(String),
    #[error("cell ({row},{col}) lies outside the shape")]
    CellOutsideShape { row: usize, col: usize },
    #[error("row/column sum violation: {0}")]
    RowColumnSumViolation(String),
    #[error("invalid occurrence: {0}")]
    InvalidOccurrence(String),
    #[error("interchange did not finish within {budget} steps")]
    StepBudgetExhausted { budget: usize, trace: Vec<PsiMove> },
    #[error("interchange revisited a filling after {} steps without reaching the target", trace.len())]
    InterchangeStalled { trace: Vec<PsiMove> },
    #[error("infeasible sums: {0}")]
    InfeasibleSums(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("malformed filling: {0}")]
    MalformedFilling(String),
    #[error("rank {n} exceeds the enumeration limit {max}")]
    RankTooLarge { n: usize, max: usize },
}
