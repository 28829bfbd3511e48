use thiserror::Error;

use crate::polyring::IntPoly;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The divisor does not divide the dividend in `Z[q]`.
    #[error("non-exact division: ({dividend}) / ({divisor}) leaves remainder {remainder}")]
    NonExactDivision {
        dividend: IntPoly,
        divisor: IntPoly,
        remainder: IntPoly,
    },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("series constant term must be +1 or -1, got {0}")]
    NonUnitConstantTerm(IntPoly),
    #[error("bad matrix shape: {0}")]
    BadShape(String),
    #[error("cofactor oracle refused a {size}x{size} matrix (bound {bound})")]
    OracleSizeExceeded { size: usize, bound: usize },
    #[error("determinant engines disagree on a {size}x{size} matrix")]
    EngineMismatch { size: usize },
    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    IndexOutOfRange { row: usize, col: usize, size: usize },
    #[error("series truncated at order {order}, coefficient {needed} required")]
    InsufficientOrder { order: usize, needed: usize },
    #[error("r table has no entry for (m={m}, n={n})")]
    MissingTableEntry { m: usize, n: usize },
    #[error("r table conflict at (m={m}, n={n}): {existing} vs {inserted}")]
    TableConflict {
        m: usize,
        n: usize,
        existing: IntPoly,
        inserted: IntPoly,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}
