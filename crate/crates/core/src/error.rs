use thiserror::Error;

/// Everything that can go wrong while loading tables or deriving quantities from them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("format error: {0}")]
    Format(String),

    #[error("inconsistent table: {0}")]
    InconsistentTable(String),

    #[error("table is incomplete: {0}")]
    IncompleteTable(String),

    #[error("character {0} is linear (dimension 1)")]
    LinearCharacter(usize),

    #[error("character {0} vanishes on every class outside its scalar subgroup")]
    DegenerateSpectrum(usize),

    #[error("character {target} is not trivial on the scalar subgroup of character {source_char}")]
    NotTrivialOnKernel { target: usize, source_char: usize },

    #[error("inconsistent incidence profile for target {target}: {detail}")]
    InconsistentProfile { target: usize, detail: String },

    #[error("level-sum and class-sum multiplicities disagree: {level_sum} vs {class_sum}")]
    CrossCheckFailure { level_sum: f64, class_sum: f64 },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("multiplicity {value} for character {target} is not a nonnegative integer")]
    IntegralityFailure { target: usize, value: f64 },

    #[error("point {0} appears twice in cycle notation")]
    RepeatedPoint(usize),

    #[error("group closure exceeded cap of {0} elements")]
    CapExceeded(usize),

    #[error("group order {group} does not match table order {table}")]
    OrderMismatch { group: usize, table: u64 },

    #[error("selector error: {0}")]
    Selector(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
