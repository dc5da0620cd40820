use thiserror::Error;

use crate::fuzzy::Requirement;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix has no rows")]
    Empty,

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("dimension mismatch: {what} has length {found}, expected {expected}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid trapezoidal number: {0}")]
    InvalidTrapezoid(String),

    #[error("right-hand side component {index} is not a fuzzy number (violates {violations:?})")]
    InvalidFuzzyNumber {
        index: usize,
        violations: Vec<Requirement>,
    },

    #[error("zero or tiny pivot in column {column}: |pivot| = {magnitude:e}, floor = {floor:e}")]
    SingularOrTinyPivot {
        column: usize,
        magnitude: f64,
        floor: f64,
    },

    #[error("zero diagonal entry at row {row}")]
    ZeroDiagonal { row: usize },

    #[error("invalid iteration parameters: {0}")]
    InvalidParams(String),

    #[error(
        "iteration did not converge after {iterations} steps (relative residual {residual:e})"
    )]
    NotConverged {
        iterations: usize,
        residual: f64,
        iterate: Vec<f64>,
    },

    #[error("coefficient matrix is not an H-matrix (nor SDD nor an M-matrix)")]
    UnsupportedMatrixClass,
}
