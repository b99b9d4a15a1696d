use crate::coeff::VarSet;

/// Errors surfaced by the library. Internal invariant failures (e.g. an
/// operator sum that fails its final exact division) are reported through
/// `NotDivisible` so callers can distinguish bugs from bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("coefficient field mismatch: {0} vs {1}")]
    VarSetMismatch(VarSet, VarSet),
    #[error("genuine pole at {0}")]
    Pole(String),
    #[error("exact division leaves a nonzero remainder")]
    NotDivisible,
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("cell ({0},{1}) lies outside the diagram")]
    CellOutsideDiagram(usize, usize),
    #[error("partitions have different weights")]
    WeightMismatch,
    #[error("skew shape is not a vertical strip")]
    NotVerticalStrip,
    #[error("partition has {0} parts but only {1} variables are available")]
    TooManyParts(usize, usize),
    #[error("degree {0} exceeds variable count {1}: the power-sum pairing is not defined there")]
    DegreeExceedsVars(usize, usize),
    #[error("variable index {0} out of range for {1} variables")]
    IndexOutOfRange(usize, usize),
    #[error("operator order {0} out of range for {1} variables")]
    OrderOutOfRange(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
